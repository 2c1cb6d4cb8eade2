#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ginv/group.hpp"

namespace ginv {

using ElemPair = std::pair<ElemId, ElemId>;

struct DoubleClassOptions {
  std::size_t max_pairs = 5'000'000;
};

/// Commuting pairs (f, g) and their orbits under simultaneous conjugation.
class DoubleClassData {
 public:
  std::size_t pair_count() const { return pair_g_.size(); }
  std::size_t count() const { return reps_.size(); }

  /// Index of (f, g) in lexicographic order of commuting pairs; throws
  /// std::invalid_argument if f and g do not commute.
  std::size_t pair_index(ElemId f, ElemId g) const;
  ElemPair pair(std::size_t index) const;

  std::uint32_t class_of_pair(std::size_t index) const { return class_of_pair_[index]; }
  std::uint32_t class_of(ElemId f, ElemId g) const { return class_of_pair_[pair_index(f, g)]; }

  /// Least pair of each double class.
  const std::vector<ElemPair>& reps() const { return reps_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  /// Class of (f^-1, g^-1) for a representative (f, g).
  const std::vector<std::uint32_t>& inverse_dclass() const { return inverse_; }

  /// Elements commuting with f, ascending.
  std::span<const ElemId> centralizer_of(ElemId f) const {
    return {pair_g_.data() + offset_[f], offset_[f + 1] - offset_[f]};
  }

 private:
  friend DoubleClassData double_classes(const Group&, const ClassData&, const DoubleClassOptions&);

  std::vector<std::size_t> offset_;  // |G| + 1 entries
  std::vector<ElemId> pair_g_;
  std::vector<std::uint32_t> class_of_pair_;
  std::vector<ElemPair> reps_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint32_t> inverse_;
};

DoubleClassData double_classes(const Group& g, const ClassData& classes,
                               const DoubleClassOptions& options = {});

/// One part n_sigma * n_mid * n_pi of a factorized partition with its unit
/// a in U(Z / n_mid), stored as the least positive residue (a = 1 if n_mid = 1).
struct FactorBlock {
  int n_sigma = 1;
  int n_mid = 1;
  int n_pi = 1;
  int unit = 1;

  int size() const { return n_sigma * n_mid * n_pi; }
  friend auto operator<=>(const FactorBlock&, const FactorBlock&) = default;
};

/// Blocks sorted in canonical (descending) order.
struct FactorizedPartition {
  std::vector<FactorBlock> blocks;

  int total() const;
  void canonicalize();
  /// Text like "1.1.2 + 1.1.1" followed by "  a=(2)" when some n_mid > 1.
  std::string to_string() const;
  friend auto operator<=>(const FactorizedPartition&, const FactorizedPartition&) = default;
};

/// Block order: larger parts first, then (n_sigma, n_mid, n_pi, unit) descending.
bool block_precedes(const FactorBlock& a, const FactorBlock& b);

/// The factorized partition labelling the double class of a commuting pair
/// of permutations of {0..n-1}.
FactorizedPartition sn_double_class_invariant(std::size_t n, const Perm& sigma, const Perm& pi);

/// Every factorized partition of n, in a fixed deterministic order: the
/// reverse of the multiset order induced by block_precedes, so the partition
/// into n fixed points comes first and the single n-block (3.1.1 for n = 3) last.
std::vector<FactorizedPartition> sn_enumerate_factorized_partitions(int n);

}  // namespace ginv
