#ifndef GRIDBAND_TYPES_HPP
#define GRIDBAND_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridband {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a request would enumerate more than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a cross-check between two independent routes fails.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Exact quotient a / b rounded once to the nearest double.
inline double ratio_to_double(const BigInt& a, const BigInt& b) {
  return BigRational(a, b).convert_to<double>();
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

/// (n, d): the d-fold product of a path with n edges.
struct GridParams {
  int n = 1;
  int d = 1;

  GridParams() = default;
  GridParams(int n_, int d_) : n(n_), d(d_) {
    if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
    if (d < 1) throw std::invalid_argument("d must be >= 1, got " + std::to_string(d));
  }

  BigInt vertex_count() const { return big_pow(static_cast<std::uint64_t>(n) + 1, d); }

  BigInt edge_count() const {
    return BigInt(d) * n * big_pow(static_cast<std::uint64_t>(n) + 1, d - 1);
  }

  /// Vertex count as a machine integer, or BudgetExceeded when it is above `budget`.
  std::uint64_t vertex_count_within(std::uint64_t budget, const std::string& what) const {
    BigInt v = vertex_count();
    if (v > budget) {
      throw BudgetExceeded(what + ": P_" + std::to_string(n) + "^" + std::to_string(d) + " has " +
                           v.str() + " vertices, budget is " + std::to_string(budget));
    }
    return v.convert_to<std::uint64_t>();
  }

  friend bool operator==(const GridParams&, const GridParams&) = default;
};

}  // namespace gridband

#endif  // GRIDBAND_TYPES_HPP
