#include "lensharm/cone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lensharm {

namespace {

// Exact integer determinant (Bareiss fraction-free elimination).
Int det_int(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Exact determinant by fraction-free Gaussian elimination on a rational copy.
Rat det_rat(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

SimplicialCone::SimplicialCone(const std::vector<std::vector<Rat>>& rays) {
  const std::size_t n = rays.size();
  if (n < 2) throw std::invalid_argument("cone needs at least two rays");
  rays_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rays[i].size() != n)
      throw std::invalid_argument("cone must have n rays of dimension n");
    // Clear denominators and divide by the content: primitive integer ray.
    Int lcm = 1;
    for (const Rat& c : rays[i]) {
      if (c < 0)
        throw std::invalid_argument("ray coordinates must be nonnegative");
      Int d = denominator(c);
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> w(n);
    Int content = 0;
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = numerator(rays[i][j]) * (lcm / denominator(rays[i][j]));
      content = gcd(content, w[j]);
    }
    if (content == 0) throw std::invalid_argument("zero ray");
    for (Int& c : w) c /= content;
    rays_[i] = std::move(w);
  }
  // ray-column matrix R, its determinant sign, and its adjugate
  std::vector<std::vector<Int>> r(n, std::vector<Int>(n));
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row) r[row][col] = rays_[col][row];
  Int det = det_int(r);
  if (det == 0) throw std::invalid_argument("rays are linearly dependent");
  det_sign_ = det > 0 ? 1 : -1;
  adjugate_.assign(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Int>> sub(n - 1, std::vector<Int>(n - 1));
      for (std::size_t a = 0, ai = 0; a < n; ++a) {
        if (a == j) continue;  // adj[i][j] is the (j, i) cofactor
        for (std::size_t b = 0, bi = 0; b < n; ++b) {
          if (b == i) continue;
          sub[ai][bi] = r[a][b];
          ++bi;
        }
        ++ai;
      }
      Int c = det_int(std::move(sub));
      adjugate_[i][j] = (i + j) % 2 == 0 ? c : -c;
    }
  }
}

bool SimplicialCone::is_positive_orthant() const {
  const int dim = n();
  std::vector<bool> seen(dim, false);
  for (const auto& ray : rays_) {
    int axis = -1;
    for (int j = 0; j < dim; ++j) {
      if (ray[j] != 0) {
        if (axis >= 0) return false;
        axis = j;
      }
    }
    if (axis < 0 || seen[axis]) return false;
    seen[axis] = true;
  }
  return true;
}

SimplicialCone positive_orthant_cone(int n) {
  std::vector<std::vector<Rat>> rays(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) rays[i][i] = 1;
  return SimplicialCone(rays);
}

std::vector<Rat> cone_coordinates(const SimplicialCone& cone,
                                  const std::vector<Rat>& x) {
  const int n = cone.n();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("point dimension does not match cone");
  // Augmented system [R | x] with rays as columns, exact elimination.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = Rat(cone.rays()[c][r]);
    a[r][n] = x[r];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    // piv < n always: rays are independent.
    std::swap(a[piv], a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rat> lambda(n);
  for (int r = 0; r < n; ++r) lambda[r] = a[r][n] / a[r][r];
  return lambda;
}

bool cone_contains(const SimplicialCone& cone, const std::vector<Rat>& x) {
  for (const Rat& l : cone_coordinates(cone, x))
    if (l < 0) return false;
  return true;
}

bool cone_contains(const SimplicialCone& cone, const LatticePoint& point) {
  const int n = cone.n();
  if (static_cast<int>(point.coords.size()) != n)
    throw std::invalid_argument("point dimension does not match cone");
  // integer-only: sign of each entry of adj(R) x against sign(det R)
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j) acc += cone.adjugate()[i][j] * point.coords[j];
    if (cone.det_sign() > 0 ? acc < 0 : acc > 0) return false;
  }
  return true;
}

Rat section_volume(const SimplicialCone& cone) {
  const int n = cone.n();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    Int sum = 0;
    for (int j = 0; j < n; ++j) sum += cone.rays()[i][j];
    // sum > 0: rays are nonzero with nonnegative coordinates
    for (int j = 0; j < n; ++j) m[i][j] = Rat(cone.rays()[i][j], sum);
  }
  Rat d = det_rat(m);
  if (d < 0) d = -d;
  return d / Rat(factorial(n));
}

OrthantSignature::OrthantSignature(std::vector<int> s) : signs(std::move(s)) {
  if (signs.empty()) throw std::invalid_argument("empty orthant signature");
  for (int v : signs)
    if (v != 1 && v != -1)
      throw std::invalid_argument("orthant signs must be +1 or -1");
}

std::vector<OrthantSignature> all_orthants(int n) {
  std::vector<OrthantSignature> out;
  out.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s(n);
    for (int j = 0; j < n; ++j) s[j] = (mask >> j) & 1 ? -1 : 1;
    out.emplace_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Int>> OrthantCone::signed_rays() const {
  const int n = signature.n();
  std::vector<std::vector<Int>> rays(n, std::vector<Int>(n, 0));
  for (int j = 0; j < n; ++j) rays[j][j] = signature.signs[j];
  return rays;
}

LatticePoint OrthantCone::reflect(const LatticePoint& p) const {
  std::vector<long long> c(p.coords);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= signature.signs[j];
  return make_point(std::move(c));
}

OrthantCone orthant_cone(const OrthantSignature& sig) {
  return OrthantCone{sig, positive_orthant_cone(sig.n())};
}

namespace {

Rat parse_rat(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(tok));
    Int num(tok.substr(0, slash));
    Int den(tok.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational token '" + tok + "'");
  }
}

}  // namespace

SimplicialCone parse_cone_text(const std::string& text) {
  std::vector<std::vector<Rat>> rays;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<Rat> ray;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      auto b = tok.find_first_not_of(" \t\r");
      auto e = tok.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw std::invalid_argument("empty ray entry");
      ray.push_back(parse_rat(tok.substr(b, e - b + 1)));
    }
    rays.push_back(std::move(ray));
  }
  if (rays.empty()) throw std::invalid_argument("cone file has no rays");
  return SimplicialCone(rays);
}

std::string cone_to_text(const SimplicialCone& cone) {
  std::ostringstream os;
  for (const auto& ray : cone.rays()) {
    for (std::size_t j = 0; j < ray.size(); ++j) os << (j ? "," : "") << ray[j];
    os << "\n";
  }
  return os.str();
}

}  // namespace lensharm
