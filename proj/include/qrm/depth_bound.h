#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qrm {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

enum class CliffordCountFormula { Product, Sum };

// 2^{n^2+2n} prod_{j=1}^n (4^j - 1); the Sum variant replaces the product by
// a sum. n = 0 gives 1 for both.
BigInt clifford_group_size(std::uint64_t n, CliffordCountFormula f = CliffordCountFormula::Product);

// Upper bound on the number of depth-1 circuits of l-qubit gates on n qubits:
// (g l)! / ((l!)^g g!) * |C_l|^g with g = ceil(n / l).
BigInt layer_count_bound(std::uint64_t n, std::uint64_t l, const BigInt& size_cl);

struct DepthBound {
  BigInt clifford_count;  // |C_k|
  BigInt layer_count;     // N_{l,n} upper bound
  BigFloat value;         // log|C_k| / log N_{l,n}
  std::uint64_t ceiling = 0;

  double as_double() const { return value.convert_to<double>(); }
  std::string value_string(int digits = 30) const;
};

// Throws std::invalid_argument unless 1 <= l <= n and k <= n.
DepthBound depth_lower_bound(std::uint64_t n, std::uint64_t k, std::uint64_t l, const BigInt& size_cl,
                             CliffordCountFormula f = CliffordCountFormula::Product);
DepthBound depth_lower_bound(std::uint64_t n, std::uint64_t k, std::uint64_t l,
                             CliffordCountFormula f = CliffordCountFormula::Product);

}  // namespace qrm
