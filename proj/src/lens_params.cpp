#include "lensharm/lens_params.hpp"

#include <sstream>
#include <stdexcept>

#include "lensharm/numeric.hpp"

namespace lensharm {

LensParams::LensParams(long long q, std::vector<long long> p)
    : q_(q), p_(std::move(p)) {
  if (q_ < 1) throw std::invalid_argument("q must be a positive integer");
  if (p_.size() < 2)
    throw std::invalid_argument("at least two rotation parameters required");
  for (std::size_t j = 0; j < p_.size(); ++j) {
    p_[j] = mod_reduce(p_[j], q_);
    long long g = gcd_ll(p_[j], q_);
    if (g != 1) {
      std::ostringstream os;
      os << "p[" << j + 1 << "] = " << p_[j] << " is not prime to q = " << q_
         << " (gcd = " << g << ")";
      throw std::invalid_argument(os.str());
    }
  }
}

std::string LensParams::to_string() const {
  std::ostringstream os;
  os << "(" << q_ << ";";
  for (std::size_t j = 0; j < p_.size(); ++j) os << (j ? "," : " ") << p_[j];
  os << ")";
  return os.str();
}

}  // namespace lensharm
