#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ginv {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);

/// An exact cyclotomic integer sum_j c_j * zeta_m^j.
///
/// Coefficients are kept unreduced in Z[x]/(x^m - 1); equality and hashing go
/// through the normal form, the remainder modulo the m-th cyclotomic
/// polynomial. Values of different orders are combined in the lcm order.
class Cyclo {
 public:
  Cyclo() : order_(1), coeffs_(1, 0) {}
  explicit Cyclo(std::uint32_t order);

  static Cyclo integer(std::uint32_t order, std::int64_t value);
  /// zeta_order^power.
  static Cyclo root(std::uint32_t order, std::uint64_t power);

  std::uint32_t order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  void add_term(std::uint64_t power, std::int64_t coeff);

  /// Same value written over zeta_{new_order}; new_order must be a multiple of order().
  Cyclo lifted(std::uint32_t new_order) const;

  Cyclo conj() const;
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(std::int64_t k);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(Cyclo a, std::int64_t k) { return a *= k; }

  /// Remainder modulo the cyclotomic polynomial, length phi(order).
  std::vector<std::int64_t> normal_form() const;
  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);

  /// Image under zeta_order -> z in F_p. z must have multiplicative order order().
  std::uint64_t reduce_mod(std::uint64_t p, std::uint64_t z) const;

  /// Readable form such as "2 + z12^3 - z12^5", or an integer.
  std::string to_string() const;

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> coeffs_;
};

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b);

}  // namespace ginv
