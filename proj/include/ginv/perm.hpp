#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ginv {

using Point = std::uint16_t;

/// Raised for malformed textual input (cycle notation, group specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection of {0, ..., n-1} in one-line notation.
///
/// Products act right to left, as functions: (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() : images_{0} {}
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Builds a permutation from 0-based cycles. Points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  bool is_identity() const;
  std::size_t order() const;
  bool is_even() const;

  /// Cycle lengths (including fixed points), sorted non-increasing.
  std::vector<std::size_t> cycle_type() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  /// Same permutation padded with fixed points up to `degree`.
  Perm extended(std::size_t degree) const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// Parses 1-based cycle notation such as "(1 2 3)(4 5)". Whitespace and
/// commas inside cycles are both accepted as separators. The degree is the
/// larger of `min_degree` and the largest point mentioned.
Perm parse_cycles(std::string_view text, std::size_t min_degree = 0);

}  // namespace ginv

template <>
struct std::hash<ginv::Perm> {
  std::size_t operator()(const ginv::Perm& p) const noexcept;
};
