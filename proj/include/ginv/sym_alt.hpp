#pragma once

#include <string>
#include <vector>

#include "ginv/automorphisms.hpp"

namespace ginv {

/// A partition of n, parts non-increasing.
struct CycleType {
  std::vector<int> parts;

  explicit CycleType(std::vector<int> parts);
  int n() const;
  bool is_even_permutation() const;
  std::string to_string() const;
};

CycleType cycle_type_of(const Perm& p);

/// Whether the S_n-class of this (even) type splits into two A_n-classes:
/// true iff all parts are odd and pairwise distinct. Throws
/// std::invalid_argument for types of odd permutations.
bool splits_in_alternating(const CycleType& t);

/// For a splitting type: whether its elements are conjugate to their inverses
/// in A_n, i.e. whether sum (n_i - 1)/2 is even. Throws std::invalid_argument
/// if the type does not split.
bool an_self_inverse_parity(const CycleType& t);

enum class AnInverting { identity_inverting, phi_inverting, no_inverting };

std::string to_string(AnInverting c);

/// Closed-form classification from the splitting types of n alone.
AnInverting an_classification_closed_form(int n);

/// Classification of class-inverting automorphisms of A_n. Uses the closed
/// form except for n = 6, where Aut(A_6) is larger than the conjugation
/// action of S_6 and the generic search decides.
AnInverting an_classification(int n, const SearchOptions& options = {});

/// Partitions of n into distinct odd parts (the splitting types), each
/// non-increasing, in lexicographically decreasing order.
std::vector<CycleType> splitting_types(int n);

}  // namespace ginv
