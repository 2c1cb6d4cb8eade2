#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ginv/group.hpp"

namespace ginv {

enum class GroupKind {
  symmetric,
  alternating,
  cyclic,
  abelian_product,
  dihedral,
  quaternion_q8,
  mathieu11,
  heisenberg,
  frobenius21,
  explicit_generators,
};

/// Description of one of the supported example groups.
struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  /// n for S_n, A_n, C_n, D_n; the factor orders for an abelian product;
  /// the prime p for Heisenberg(p).
  std::vector<int> params;
  std::vector<Perm> generators;  // explicit_generators only

  static GroupSpec symmetric(int n) { return {GroupKind::symmetric, {n}, {}}; }
  static GroupSpec alternating(int n) { return {GroupKind::alternating, {n}, {}}; }
  static GroupSpec cyclic(int n) { return {GroupKind::cyclic, {n}, {}}; }
  static GroupSpec abelian(std::vector<int> orders) {
    return {GroupKind::abelian_product, std::move(orders), {}};
  }
  static GroupSpec dihedral(int n) { return {GroupKind::dihedral, {n}, {}}; }
  static GroupSpec q8() { return {GroupKind::quaternion_q8, {}, {}}; }
  static GroupSpec m11() { return {GroupKind::mathieu11, {}, {}}; }
  static GroupSpec heisenberg(int p) { return {GroupKind::heisenberg, {p}, {}}; }
  static GroupSpec f21() { return {GroupKind::frobenius21, {}, {}}; }
  static GroupSpec explicit_gens(std::vector<Perm> gens) {
    return {GroupKind::explicit_generators, {}, std::move(gens)};
  }
};

/// Parses the textual group grammar: "S5", "A6", "C12", "Ab[2,4,3]", "D4",
/// "Q8", "M11", "H27", "F21", "perm: (1 2 3)(4 5), (1 2)".
/// Dn denotes the dihedral group of order 2n.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text form, parseable by parse_group_spec.
std::string to_string(const GroupSpec& spec);

/// Builds the group with fixed generators. Presentations are attached for
/// the dihedral, quaternion, Mathieu, Heisenberg and Frobenius groups, and
/// relators for S_n and A_n.
Group build(const GroupSpec& spec, const GroupOptions& options = {});

/// Number of subgroups of prime order p when the Sylow p-subgroup is cyclic
/// of order p: (#elements of order p) / (p - 1).
std::size_t sylow_count(const Group& g, std::size_t p);

/// Order of the normalizer of the cyclic subgroup generated by x, by brute force.
std::size_t cyclic_normalizer_order(const Group& g, ElemId x);

bool is_prime(std::size_t n);

}  // namespace ginv
