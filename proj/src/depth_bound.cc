#include "qrm/depth_bound.h"

#include <sstream>
#include <stdexcept>

namespace qrm {

namespace {

BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t t = 2; t <= n; ++t) out *= t;
  return out;
}

BigFloat log_of(const BigInt& v) { return boost::multiprecision::log(BigFloat(v)); }

}  // namespace

BigInt clifford_group_size(std::uint64_t n, CliffordCountFormula f) {
  if (n == 0) return 1;
  BigInt agg = f == CliffordCountFormula::Product ? 1 : 0;
  BigInt four = 1;
  for (std::uint64_t j = 1; j <= n; ++j) {
    four *= 4;
    if (f == CliffordCountFormula::Product) {
      agg *= four - 1;
    } else {
      agg += four - 1;
    }
  }
  return (BigInt(1) << static_cast<unsigned>(n * n + 2 * n)) * agg;
}

BigInt layer_count_bound(std::uint64_t n, std::uint64_t l, const BigInt& size_cl) {
  const std::uint64_t g = (n + l - 1) / l;
  BigInt groups = factorial(g * l) / (boost::multiprecision::pow(factorial(l), static_cast<unsigned>(g)) * factorial(g));
  return groups * boost::multiprecision::pow(size_cl, static_cast<unsigned>(g));
}

std::string DepthBound::value_string(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

DepthBound depth_lower_bound(std::uint64_t n, std::uint64_t k, std::uint64_t l, const BigInt& size_cl,
                             CliffordCountFormula f) {
  if (l < 1 || l > n) throw std::invalid_argument("need 1 <= l <= n");
  if (k > n) throw std::invalid_argument("need k <= n");
  if (size_cl < 2) throw std::invalid_argument("|C_l| must be at least 2");
  DepthBound out;
  out.clifford_count = clifford_group_size(k, f);
  out.layer_count = layer_count_bound(n, l, size_cl);
  out.value = log_of(out.clifford_count) / log_of(out.layer_count);
  out.ceiling = boost::multiprecision::ceil(out.value).convert_to<std::uint64_t>();
  return out;
}

DepthBound depth_lower_bound(std::uint64_t n, std::uint64_t k, std::uint64_t l, CliffordCountFormula f) {
  return depth_lower_bound(n, k, l, clifford_group_size(l, f), f);
}

}  // namespace qrm
