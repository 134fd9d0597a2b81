#include "lensharm/isospectrality.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace lensharm {

ShellProfile shell_profile(const CongruenceLattice& lattice, long long K) {
  if (K < 0) throw std::invalid_argument("negative profile depth");
  ShellCounter counter(lattice, ShellRegion::full_signed());
  counter.ensure(K);
  ShellProfile profile{lattice.params(), {}};
  profile.counts.reserve(K + 1);
  for (long long k = 0; k <= K; ++k) profile.counts.push_back(counter.count(k));
  return profile;
}

IsospecVerdict isospectral(const LensParams& a, const LensParams& b, long long K) {
  if (a.n() != b.n())
    throw std::invalid_argument("parameter tuples have different lengths");
  if (K < 1) throw std::invalid_argument("comparison depth must be >= 1");
  ShellProfile pa = shell_profile(build_lattice(a), K);
  ShellProfile pb = shell_profile(build_lattice(b), K);
  IsospecVerdict v{true, K, std::nullopt};
  for (long long k = 0; k <= K; ++k) {
    if (pa.counts[k] != pb.counts[k]) {
      v.isospectral_up_to_depth = false;
      v.first_differing_shell = k;
      break;
    }
  }
  return v;
}

bool multiplicity_crosscheck(const LensParams& a, const LensParams& b,
                             long long s_max) {
  if (a.n() != b.n())
    throw std::invalid_argument("parameter tuples have different lengths");
  SpectrumTable ta = spectrum_table(build_lattice(a), s_max);
  SpectrumTable tb = spectrum_table(build_lattice(b), s_max);
  bool agree = true;
  for (long long s = 0; s <= s_max; ++s) {
    if (ta.rows[s].multiplicity != tb.rows[s].multiplicity) {
      agree = false;
      break;
    }
  }
  if (s_max >= 1) {
    bool shells_agree = isospectral(a, b, s_max).isospectral_up_to_depth;
    if (shells_agree != agree)
      throw std::logic_error(
          "multiplicity tables and shell profiles disagree; the triangular "
          "relation between them is broken");
  }
  return agree;
}

// ---------------------------------------------------------------------------
// Isometry classification
// ---------------------------------------------------------------------------

namespace {

std::vector<long long> units_mod(long long q) {
  std::vector<long long> units;
  for (long long l = 1; l < q; ++l)
    if (gcd_ll(l, q) == 1) units.push_back(l);
  if (q == 1) units.push_back(0);  // the zero tuple is its own orbit
  return units;
}

std::vector<long long> folded_orbit_tuple(const LensParams& params, long long l) {
  const long long q = params.q();
  std::vector<long long> t(params.p().size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    long long x = mul_mod(params.p()[j], l, q);
    t[j] = std::min(x, (q - x) % q);  // sign flip folds x to q - x
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

IsometryClass canonicalize_isometry(const LensParams& params) {
  const long long q = params.q();
  IsometryClass cls{q, {}};
  for (long long l : units_mod(q)) {
    std::vector<long long> cand = folded_orbit_tuple(params, l);
    if (cls.rep.empty() || cand < cls.rep) cls.rep = std::move(cand);
  }
  return cls;
}

std::string IsometryClass::to_string() const {
  std::ostringstream os;
  os << "(" << q << ";";
  for (std::size_t j = 0; j < rep.size(); ++j) os << (j ? "," : " ") << rep[j];
  os << ")";
  return os.str();
}

std::vector<LensParams> isometry_class_representatives(int n, long long q) {
  if (n < 2) throw std::invalid_argument("dimension parameter must be >= 2");
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (q == 1) return {LensParams(1, std::vector<long long>(n, 0))};

  // folded unit values x = min(x, q-x); class reps are built from these
  std::vector<long long> folded;
  for (long long x = 1; x <= q / 2; ++x)
    if (gcd_ll(x, q) == 1) folded.push_back(x);
  if (q == 2) folded.assign(1, 1);

  std::vector<LensParams> reps;
  std::vector<long long> tuple(n);
  // nondecreasing tuples over the folded values, filtered to canonical ones
  auto rec = [&](auto&& self, int j, std::size_t lo) -> void {
    if (j == n) {
      LensParams params(q, tuple);
      if (canonicalize_isometry(params).rep == tuple) reps.push_back(params);
      return;
    }
    for (std::size_t i = lo; i < folded.size(); ++i) {
      tuple[j] = folded[i];
      self(self, j + 1, i);
    }
  };
  rec(rec, 0, 0);
  return reps;
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

std::vector<IsospectralPair> search_pairs(int n, long long q_min, long long q_max,
                                          const SearchOptions& opts) {
  if (q_min < 1 || q_max < q_min)
    throw std::invalid_argument("bad q range");
  std::vector<IsospectralPair> found;

  for (long long q = q_min; q <= q_max; ++q) {
    const long long depth = opts.depth > 0 ? opts.depth : 2 * q;
    std::vector<LensParams> reps = isometry_class_representatives(n, q);
    std::vector<ShellProfile> profiles(reps.size(), ShellProfile{LensParams(1, std::vector<long long>(n, 0)), {}});

    const unsigned workers =
        std::max(1u, std::min<unsigned>(opts.workers, reps.size()));
    if (workers <= 1) {
      for (std::size_t i = 0; i < reps.size(); ++i)
        profiles[i] = shell_profile(build_lattice(reps[i]), depth);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < reps.size(); i += workers)
            profiles[i] = shell_profile(build_lattice(reps[i]), depth);
        });
      }
      for (auto& th : pool) th.join();
    }

    std::map<std::vector<Int>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < reps.size(); ++i)
      buckets[profiles[i].counts].push_back(i);

    for (const auto& [profile, members] : buckets) {
      if (members.size() < 2) continue;
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const LensParams& pa = reps[members[a]];
          const LensParams& pb = reps[members[b]];
          const long long verify_depth = std::max(opts.verify_smax, depth);
          if (!multiplicity_crosscheck(pa, pb, verify_depth)) continue;
          IsospectralPair pair;
          pair.q = q;
          pair.p1 = pa.p();
          pair.p2 = pb.p();
          if (pair.p2 < pair.p1) std::swap(pair.p1, pair.p2);
          pair.verified_depth = verify_depth;
          pair.profile_prefix.assign(
              profile.begin(),
              profile.begin() + std::min<std::size_t>(profile.size(), 11));
          found.push_back(std::move(pair));
        }
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.q, x.p1, x.p2) < std::tie(y.q, y.p1, y.p2);
  });
  return found;
}

std::string pair_to_json_line(const IsospectralPair& pair) {
  nlohmann::ordered_json j;
  j["q"] = pair.q;
  j["p1"] = pair.p1;
  j["p2"] = pair.p2;
  j["verified_depth"] = pair.verified_depth;
  nlohmann::ordered_json prefix = nlohmann::ordered_json::array();
  for (const Int& c : pair.profile_prefix)
    prefix.push_back(c.convert_to<long long>());
  j["profile_prefix"] = std::move(prefix);
  return j.dump();
}

}  // namespace lensharm
