// lensharm: exact spectra of lens spaces from congruence-lattice counting.
//
// Subcommands: lattice, spectrum, measure, weyl, isospec (check | search).
// Exit codes: 0 success, 1 I/O failure, 2 invalid parameters or usage,
// 3 convergence check failed, 4 work budget exceeded, 5 isospectrality
// check found a differing shell.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lensharm/isospectrality.hpp"
#include "lensharm/measures.hpp"
#include "lensharm/oracle.hpp"
#include "lensharm/spectral.hpp"

using namespace lensharm;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode {
  exit_ok = 0,
  exit_io = 1,
  exit_invalid = 2,
  exit_not_converged = 3,
  exit_budget = 4,
  exit_differs = 5,
};

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// 'q,p1,p2,...' as used by isospec check
LensParams parse_params_list(const std::string& text) {
  auto values = parse_ll_list(text);
  if (values.size() < 3)
    throw std::invalid_argument("expected q,p1,p2,... in '" + text + "'");
  long long q = values.front();
  values.erase(values.begin());
  return LensParams(q, values);
}

json int_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return json(v.convert_to<long long>());
  return json(v.str());
}

json rat_json(const Rat& r) {
  json j;
  j["num"] = int_json(numerator(r));
  j["den"] = int_json(denominator(r));
  return j;
}

struct OutputTarget {
  std::string path;  // empty: stdout

  int write(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      return exit_ok;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open '" << path << "' for writing\n";
      return exit_io;
    }
    f << payload;
    if (!f.good()) {
      std::cerr << "error: short write to '" << path << "'\n";
      return exit_io;
    }
    return exit_ok;
  }
};

unsigned resolve_workers(unsigned flag_value) {
  // the environment override wins so batch jobs can be tuned without
  // touching recorded command lines
  if (const char* env = std::getenv("LENSHARM_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return flag_value >= 1 ? flag_value : 1;
}

SimplicialCone load_cone(const std::string& spec, int n) {
  if (spec == "orthant") return positive_orthant_cone(n);
  std::ifstream f(spec);
  if (!f) throw std::runtime_error("cannot read cone file '" + spec + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  SimplicialCone cone = parse_cone_text(buf.str());
  if (cone.n() != n)
    throw std::invalid_argument("cone dimension does not match the p-list");
  return cone;
}

std::vector<long long> default_schedule(long long t_max) {
  std::vector<long long> ts;
  for (long long div : {8, 4, 2}) {
    long long t = t_max / div;
    if (t >= 1 && (ts.empty() || t > ts.back())) ts.push_back(t);
  }
  long long t34 = 3 * t_max / 4;
  if (t34 >= 1 && (ts.empty() || t34 > ts.back())) ts.push_back(t34);
  if (ts.empty() || t_max > ts.back()) ts.push_back(t_max);
  return ts;
}

// ---------------------------------------------------------------------------
// lattice
// ---------------------------------------------------------------------------

int cmd_lattice(const LensParams& params, const std::vector<std::string>& queries,
                const std::string& format, const OutputTarget& out) {
  auto lat = build_lattice(params);
  std::vector<std::pair<std::vector<long long>, bool>> answers;
  for (const auto& qtext : queries) {
    auto coords = parse_ll_list(qtext);
    answers.emplace_back(coords, lat.contains(make_point(coords)));
  }

  std::ostringstream os;
  if (format == "json") {
    json j;
    j["q"] = params.q();
    j["p"] = params.p();
    j["basis"] = lat.basis();
    j["det"] = lat.det();
    if (!answers.empty()) {
      json qs = json::array();
      for (const auto& [pt, inside] : answers)
        qs.push_back({{"point", pt}, {"contains", inside}});
      j["queries"] = std::move(qs);
    }
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "row";
    for (int jcol = 0; jcol < lat.n(); ++jcol) os << ",c" << jcol + 1;
    os << "\n";
    for (int i = 0; i < lat.n(); ++i) {
      os << i + 1;
      for (int jcol = 0; jcol < lat.n(); ++jcol) os << "," << lat.basis()[i][jcol];
      os << "\n";
    }
  } else {
    os << "lattice " << params.to_string() << "\n";
    os << "basis (columns generate):\n";
    for (int i = 0; i < lat.n(); ++i) {
      for (int jcol = 0; jcol < lat.n(); ++jcol)
        os << (jcol ? " " : "  ") << lat.basis()[i][jcol];
      os << "\n";
    }
    os << "det = " << lat.det() << "\n";
    for (const auto& [pt, inside] : answers) {
      os << "contains (";
      for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
      os << "): " << (inside ? "yes" : "no") << "\n";
    }
  }
  return out.write(os.str());
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

int cmd_spectrum(const LensParams& params, long long s_max,
                 const std::string& format, const OutputTarget& out) {
  auto table = spectrum_table(build_lattice(params), s_max);
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["q"] = params.q();
    j["p"] = params.p();
    json rows = json::array();
    for (const auto& r : table.rows)
      rows.push_back({{"s", r.s},
                      {"eigenvalue", int_json(r.eigenvalue)},
                      {"multiplicity", int_json(r.multiplicity)},
                      {"cumulative", int_json(r.cumulative)}});
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "s,eigenvalue,multiplicity,cumulative\n";
    for (const auto& r : table.rows)
      os << r.s << "," << r.eigenvalue << "," << r.multiplicity << ","
         << r.cumulative << "\n";
  } else {
    os << "spectrum of " << params.to_string() << "\n";
    os << "s\teigenvalue\tmultiplicity\tcumulative\n";
    for (const auto& r : table.rows)
      os << r.s << "\t" << r.eigenvalue << "\t" << r.multiplicity << "\t"
         << r.cumulative << "\n";
  }
  return out.write(os.str());
}

// ---------------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------------

int cmd_measure(const LensParams& params, const std::string& kind_name,
                const std::string& cone_spec, long long limit,
                const std::vector<long long>& explicit_samples, double tol,
                double budget, unsigned workers, const std::string& format,
                const OutputTarget& out, const std::string& csv_path) {
  auto lat = build_lattice(params);
  SimplicialCone cone = load_cone(cone_spec, params.n());
  std::vector<long long> schedule =
      explicit_samples.empty() ? default_schedule(limit) : explicit_samples;

  EmpiricalOptions opts;
  opts.rel_tol = tol;
  opts.workers = workers;
  if (budget > 0) opts.op_budget = static_cast<long double>(budget);

  MeasureReport rep = kind_name == "nu" ? nu_empirical(lat, cone, schedule, opts)
                                        : mu_empirical(lat, cone, schedule, opts);

  std::ostringstream os;
  if (format == "csv") {
    os << rep.to_csv();
  } else if (format == "json") {
    os << rep.to_json() << "\n";
  } else {
    os << (rep.kind == MeasureKind::nu ? "harmonic-counting" : "lattice-counting")
       << " measure of " << params.to_string() << "\n";
    os << "closed form: " << rat_str(rep.closed_form) << " = "
       << rat_decimal(rep.closed_form, 12) << "\n";
    for (const auto& s : rep.samples) {
      std::ostringstream v;
      v << std::setprecision(12) << static_cast<double>(s.ratio);
      os << "  t = " << s.t << "  ratio = " << v.str() << "\n";
    }
    os << "converged: " << (rep.converged ? "yes" : "no") << "\n";
    if (rep.budget_exceeded) os << "budget exceeded: series truncated\n";
  }
  int rc = out.write(os.str());
  if (rc != exit_ok) return rc;
  if (!csv_path.empty()) {
    rc = OutputTarget{csv_path}.write(rep.to_csv());
    if (rc != exit_ok) return rc;
  }
  if (rep.budget_exceeded) return exit_budget;
  return rep.converged ? exit_ok : exit_not_converged;
}

// ---------------------------------------------------------------------------
// weyl
// ---------------------------------------------------------------------------

int cmd_weyl(const LensParams& params, const std::string& format,
             const OutputTarget& out) {
  auto lat = build_lattice(params);
  auto chk = total_measure_check(lat);
  std::string verdict = chk.total_matches_weyl  ? "matches Weyl limit"
                        : chk.total_matches_paper_total
                            ? "matches stated total"
                            : "matches neither constant";
  std::ostringstream os;
  if (format == "json") {
    json j = json::parse(chk.to_json());
    j["verdict"] = verdict;
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "name,value\n";
    os << "weyl_limit," << rat_str(chk.constants.weyl_limit) << "\n";
    os << "paper_total," << rat_str(chk.constants.paper_total) << "\n";
    os << "orthant_limit," << rat_str(chk.constants.orthant_limit) << "\n";
    os << "orthant_total," << rat_str(chk.total) << "\n";
    os << "verdict," << verdict << "\n";
  } else {
    os << "eigenvalue-counting constants for " << params.to_string() << "\n";
    os << "  weyl_limit    = " << rat_str(chk.constants.weyl_limit) << " = "
       << rat_decimal(chk.constants.weyl_limit, 12) << "\n";
    os << "  paper_total   = " << rat_str(chk.constants.paper_total) << " = "
       << rat_decimal(chk.constants.paper_total, 12) << "\n";
    os << "  orthant_limit = " << rat_str(chk.constants.orthant_limit) << " = "
       << rat_decimal(chk.constants.orthant_limit, 12) << "\n";
    os << "  sum over 2^n orthant cones = " << rat_str(chk.total) << "\n";
    os << "  verdict: orthant-cone total " << verdict << "\n";
    os << "  nu/mu ratio = " << rat_str(chk.nu_mu_ratio)
       << (chk.ratio_is_beta ? " (the dimension constant)" : "") << "\n";
  }
  return out.write(os.str());
}

// ---------------------------------------------------------------------------
// isospec
// ---------------------------------------------------------------------------

int cmd_isospec_check(const LensParams& a, const LensParams& b, long long depth,
                      const std::string& format, const OutputTarget& out) {
  auto verdict = isospectral(a, b, depth);
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["a"] = {{"q", a.q()}, {"p", a.p()}};
    j["b"] = {{"q", b.q()}, {"p", b.p()}};
    j["depth"] = depth;
    j["isospectral_up_to_depth"] = verdict.isospectral_up_to_depth;
    if (verdict.first_differing_shell)
      j["first_differing_shell"] = *verdict.first_differing_shell;
    else
      j["first_differing_shell"] = nullptr;
    os << j.dump(2) << "\n";
  } else {
    os << a.to_string() << " vs " << b.to_string() << " up to depth " << depth
       << ": ";
    if (verdict.isospectral_up_to_depth)
      os << "profiles agree\n";
    else
      os << "profiles differ first at shell " << *verdict.first_differing_shell
         << "\n";
  }
  int rc = out.write(os.str());
  if (rc != exit_ok) return rc;
  return verdict.isospectral_up_to_depth ? exit_ok : exit_differs;
}

int cmd_isospec_search(int n, long long q_min, long long q_max,
                       const std::string& depth_text, long long verify_smax,
                       unsigned workers, const OutputTarget& out) {
  SearchOptions opts;
  if (depth_text != "auto") {
    std::size_t pos = 0;
    opts.depth = std::stoll(depth_text, &pos);
    if (pos != depth_text.size() || opts.depth < 1)
      throw std::invalid_argument("--depth takes 'auto' or a positive integer");
  }
  opts.verify_smax = verify_smax;
  opts.workers = workers;
  auto pairs = search_pairs(n, q_min, q_max, opts);
  std::ostringstream os;
  for (const auto& pair : pairs) os << pair_to_json_line(pair) << "\n";
  return out.write(os.str());
}

// ---------------------------------------------------------------------------
// oracle (hidden): regenerates reference fixtures
// ---------------------------------------------------------------------------

int cmd_oracle_shell(const LensParams& params, const std::string& region,
                     long long s, const OutputTarget& out) {
  oracle::BruteRegion r = region == "signed" ? oracle::BruteRegion::signed_lattice
                          : region == "open" ? oracle::BruteRegion::open_orthant
                                             : oracle::BruteRegion::closed_orthant;
  std::ostringstream os;
  os << oracle::brute_shell_count(params, r, s) << "\n";
  return out.write(os.str());
}

int cmd_oracle_molien(const LensParams& params, long long s_max,
                      const OutputTarget& out) {
  auto coeffs = oracle::molien_multiplicity(params, s_max);
  std::ostringstream os;
  for (std::size_t s = 0; s < coeffs.size(); ++s)
    os << s << "," << coeffs[s] << "\n";
  return out.write(os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Laplace-Beltrami spectra of lens spaces via congruence-lattice counting"};
  app.require_subcommand(1);

  std::string p_text, format = "human", out_path, cone_spec = "orthant";
  long long q = 1, s_max = 10, depth = 10, t_limit = 0;
  std::vector<std::string> queries;
  std::string a_text, b_text, samples_text, csv_path, depth_text = "auto";
  std::string kind = "nu", region_text = "closed";
  double tol = 0.02, budget = 0;
  unsigned workers = 1;
  int search_n = 3;
  long long q_min = 1, q_max = 20, verify_smax = 60;

  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
    if (with_format)
      sub->add_option("--format", format, "output format: human, json, csv")
          ->check(CLI::IsMember({"human", "json", "csv"}));
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--q", q, "order of the cyclic group")->required();
    sub->add_option("--p", p_text, "comma-separated rotation parameters")
        ->required();
  };

  auto* lattice_cmd = app.add_subcommand("lattice", "canonical basis of the congruence lattice");
  add_params(lattice_cmd);
  lattice_cmd->add_option("--query", queries, "membership query point, comma-separated");
  add_common(lattice_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact eigenvalue multiplicity table");
  add_params(spectrum_cmd);
  spectrum_cmd->add_option("--smax", s_max, "largest degree in the table");
  add_common(spectrum_cmd);

  auto* measure_cmd = app.add_subcommand("measure", "empirical vs closed-form measure of a cone");
  add_params(measure_cmd);
  measure_cmd->add_option("--kind", kind, "nu (harmonic) or mu (lattice)")
      ->check(CLI::IsMember({"nu", "mu"}));
  measure_cmd->add_option("--cone", cone_spec, "'orthant' or a cone file (one ray per line)");
  measure_cmd->add_option("--tmax", t_limit, "largest truncation parameter (nu)");
  measure_cmd->add_option("--smax", s_max, "largest scaling parameter (mu)");
  measure_cmd->add_option("--samples", samples_text, "explicit comma-separated sample points");
  measure_cmd->add_option("--tol", tol, "relative convergence tolerance");
  measure_cmd->add_option("--budget", budget, "cap on counting work (elementary operations)");
  measure_cmd->add_option("--workers", workers, "worker threads (env LENSHARM_WORKERS overrides)");
  measure_cmd->add_option("--csv", csv_path, "also write the (t, ratio) series to this CSV file");
  add_common(measure_cmd);

  auto* weyl_cmd = app.add_subcommand("weyl", "eigenvalue-counting constants and exact totals");
  add_params(weyl_cmd);
  add_common(weyl_cmd);

  auto* isospec_cmd = app.add_subcommand("isospec", "isospectrality tools");
  isospec_cmd->require_subcommand(1);
  auto* check_cmd = isospec_cmd->add_subcommand("check", "compare two parameter tuples");
  check_cmd->add_option("--a", a_text, "first tuple: q,p1,p2,...")->required();
  check_cmd->add_option("--b", b_text, "second tuple: q,p1,p2,...")->required();
  check_cmd->add_option("--depth", depth, "compare shells up to this norm");
  add_common(check_cmd);
  auto* search_cmd = isospec_cmd->add_subcommand(
      "search", "hunt for isospectral non-isometric tuples (JSON lines)");
  search_cmd->add_option("--n", search_n, "tuple length")->required();
  search_cmd->add_option("--qmax", q_max, "largest group order")->required();
  search_cmd->add_option("--qmin", q_min, "smallest group order");
  search_cmd->add_option("--depth", depth_text, "'auto' (2q) or explicit profile depth");
  search_cmd->add_option("--verify-smax", verify_smax, "re-verification depth for emitted pairs");
  search_cmd->add_option("--workers", workers, "worker threads (env LENSHARM_WORKERS overrides)");
  add_common(search_cmd, false);

  auto* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group("");  // hidden: fixture regeneration only
  oracle_cmd->require_subcommand(1);
  auto* oshell = oracle_cmd->add_subcommand("shell", "");
  add_params(oshell);
  oshell->add_option("--region", region_text, "signed, closed, open");
  oshell->add_option("--s", s_max, "shell norm")->required();
  add_common(oshell, false);
  auto* omolien = oracle_cmd->add_subcommand("molien", "");
  add_params(omolien);
  omolien->add_option("--smax", s_max, "largest degree");
  add_common(omolien, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return exit_invalid;
  }

  try {
    OutputTarget out{out_path};
    workers = resolve_workers(workers);
    if (lattice_cmd->parsed())
      return cmd_lattice(LensParams(q, parse_ll_list(p_text)), queries, format, out);
    if (spectrum_cmd->parsed())
      return cmd_spectrum(LensParams(q, parse_ll_list(p_text)), s_max, format, out);
    if (measure_cmd->parsed()) {
      long long limit = kind == "nu" ? t_limit : s_max;
      if (!measure_cmd->count("--samples")) {
        if (kind == "nu" && !measure_cmd->count("--tmax"))
          throw std::invalid_argument("kind nu needs --tmax (or --samples)");
        if (kind == "mu" && !measure_cmd->count("--smax"))
          throw std::invalid_argument("kind mu needs --smax (or --samples)");
      }
      std::vector<long long> samples;
      if (measure_cmd->count("--samples")) samples = parse_ll_list(samples_text);
      return cmd_measure(LensParams(q, parse_ll_list(p_text)), kind, cone_spec,
                         limit, samples, tol, budget, workers, format, out,
                         csv_path);
    }
    if (weyl_cmd->parsed())
      return cmd_weyl(LensParams(q, parse_ll_list(p_text)), format, out);
    if (check_cmd->parsed())
      return cmd_isospec_check(parse_params_list(a_text), parse_params_list(b_text),
                               depth, format, out);
    if (search_cmd->parsed())
      return cmd_isospec_search(search_n, q_min, q_max, depth_text, verify_smax,
                                workers, out);
    if (oshell->parsed())
      return cmd_oracle_shell(LensParams(q, parse_ll_list(p_text)), region_text,
                              s_max, out);
    if (omolien->parsed())
      return cmd_oracle_molien(LensParams(q, parse_ll_list(p_text)), s_max, out);
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  }
  return exit_invalid;
}
