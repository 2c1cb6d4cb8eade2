#pragma once

#include <cstdint>
#include <vector>

#include "ginv/cyclo.hpp"
#include "ginv/group.hpp"

namespace ginv {

/// a(i, j, k) = #{(x, y) : x in C_i, y in C_j, x y = z} for a fixed z in C_k.
class ClassMultCoefficients {
 public:
  explicit ClassMultCoefficients(std::size_t classes)
      : r_(classes), data_(classes * classes * classes, 0) {}
  std::size_t classes() const { return r_; }
  std::uint64_t& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * r_ + j) * r_ + k]; }
  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * r_ + j) * r_ + k];
  }

 private:
  std::size_t r_;
  std::vector<std::uint64_t> data_;
};

ClassMultCoefficients class_mult_coefficients(const Group& g, const ClassData& classes);

/// Irreducible characters, one row per irreducible, one column per class.
///
/// Rows are ordered by degree, with the trivial character first and ties
/// broken by descending lexicographic order of the values' normal forms.
struct CharacterTable {
  std::uint32_t exponent = 1;  // common Cyclo order of every entry
  std::uint64_t prime = 0;     // modulus used for the computation
  std::vector<std::size_t> degrees;
  std::vector<std::vector<Cyclo>> chars;

  std::size_t size() const { return degrees.size(); }
  const Cyclo& value(std::size_t irr, std::size_t cls) const { return chars[irr][cls]; }
};

struct CharTableOptions {
  std::size_t max_order = 20000;
  /// Largest modulus tried when looking for a suitable prime.
  std::uint64_t prime_bound = (1ULL << 31);
};

/// Smallest prime p = 1 mod exponent with p > max(2 sqrt(order), exponent).
/// Throws std::runtime_error naming the bound when none exists below it.
std::uint64_t dixon_prime(std::size_t order, std::size_t exponent, std::uint64_t bound);

/// Exact character table by the Burnside-Dixon method.
CharacterTable character_table(const Group& g, const ClassData& classes,
                               const CharTableOptions& options = {});

bool all_characters_real(const CharacterTable& table);

}  // namespace ginv
