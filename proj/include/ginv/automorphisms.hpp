#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ginv/double_classes.hpp"
#include "ginv/group.hpp"

namespace ginv {

/// A group automorphism, stored as generator images plus the full map.
struct Automorphism {
  std::vector<ElemId> gen_images;
  std::vector<ElemId> full_map;

  ElemId operator()(ElemId x) const { return full_map[x]; }

  static Automorphism identity(const Group& g);
  /// x -> x^-1; throws std::invalid_argument for nonabelian groups.
  static Automorphism inversion(const Group& g);
  /// x -> h x h^-1.
  static Automorphism conjugation(const Group& g, ElemId h);
  /// The unique automorphism extending the given generator images, if any.
  static std::optional<Automorphism> from_generator_images(const Group& g, std::span<const ElemId> images);

  /// (*this) o inner.
  Automorphism after(const Group& g, const Automorphism& inner) const;
  bool is_identity() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.full_map == b.full_map; }
};

/// Builds the full map of the homomorphism sending generator i to images[i]
/// by walking the Cayley graph; nullopt if the assignment is inconsistent
/// or not bijective.
std::optional<std::vector<ElemId>> extend_generator_images(const Group& g, std::span<const ElemId> images);

struct SearchOptions {
  std::uint64_t node_budget = 20'000'000;
  /// Groups without relators larger than this are rejected.
  std::size_t max_presentation_free_order = 2000;
};

enum class SearchStatus { found, none, budget_exceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Automorphism> witness;
  std::uint64_t nodes = 0;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  explicit SearchBudgetExceeded(std::uint64_t budget)
      : std::runtime_error("automorphism search exceeded the node budget of " + std::to_string(budget)),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Calls `visit` for every automorphism in search order; stops early when it
/// returns false. Returns the number of search nodes. Throws
/// SearchBudgetExceeded when the budget runs out.
std::uint64_t for_each_automorphism(const Group& g, const ClassData& classes, const SearchOptions& options,
                                    const std::function<bool(const Automorphism&)>& visit);

/// Every automorphism, in search order.
std::vector<Automorphism> automorphism_group(const Group& g, const ClassData& classes,
                                             const SearchOptions& options = {});

/// One conjugation map per coset of the centre, represented by the least element.
std::vector<Automorphism> inner_automorphisms(const Group& g);

bool is_class_inverting(const Group& g, const ClassData& classes, const Automorphism& phi);
bool is_class_preserving(const Group& g, const ClassData& classes, const Automorphism& phi);
bool is_double_class_inverting(const Group& g, const DoubleClassData& dclasses, const Automorphism& phi);
bool is_double_class_preserving(const Group& g, const DoubleClassData& dclasses, const Automorphism& phi);

bool is_ambivalent(const Group& g, const ClassData& classes);
bool is_doubly_ambivalent(const Group& g, const DoubleClassData& dclasses);

/// Least class-inverting automorphism in search order, or a certificate of
/// exhaustion (status none plus the node count).
SearchResult exists_class_inverting(const Group& g, const ClassData& classes, const SearchOptions& options = {});

SearchResult exists_double_class_inverting(const Group& g, const ClassData& classes,
                                           const DoubleClassData& dclasses, const SearchOptions& options = {});

}  // namespace ginv
