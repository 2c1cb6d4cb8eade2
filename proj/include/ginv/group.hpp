#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginv/perm.hpp"

namespace ginv {

using ElemId = std::uint32_t;
inline constexpr ElemId kNoElem = static_cast<ElemId>(-1);

/// Raised when a computation would exceed a configured size cap.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// A word over generator symbols: letter +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

/// Parses a word written with letters a, b, c, ... for generators and
/// upper-case letters for their inverses; "a^7" repeats the preceding letter.
Word parse_word(std::string_view text);

struct GroupOptions {
  std::size_t max_order = 20000;
  /// Groups up to this order keep a full multiplication table.
  std::size_t table_threshold = 2600;
};

/// A permutation group with every element enumerated.
///
/// Element 0 is always the identity. Elements are addressed by ElemId in a
/// fixed canonical order, which every downstream "least index" choice uses.
class Group {
 public:
  std::size_t order() const { return count_; }
  std::size_t degree() const { return degree_; }

  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }
  /// ElemId of generator i.
  ElemId generator_id(std::size_t i) const { return generator_ids_[i]; }

  std::span<const Point> images(ElemId x) const {
    return {storage_.data() + static_cast<std::size_t>(x) * degree_, degree_};
  }
  Perm element(ElemId x) const;
  std::optional<ElemId> find(std::span<const Point> images) const;
  std::optional<ElemId> find(const Perm& p) const;
  /// Like find(), but throws if p is not an element.
  ElemId index_of(const Perm& p) const;

  ElemId identity() const { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// x * generator i.
  ElemId mul_gen(ElemId x, std::size_t i) const { return right_gen_[i * count_ + x]; }
  /// h x h^-1.
  ElemId conj(ElemId h, ElemId x) const { return mul(mul(h, x), inv(h)); }
  ElemId pow(ElemId x, long long e) const;
  bool commute(ElemId a, ElemId b) const;

  bool is_abelian() const;
  std::size_t exponent() const;

  const std::vector<Word>& relators() const { return relators_; }
  bool has_presentation() const { return !relators_.empty(); }
  void set_relators(std::vector<Word> relators);
  /// Evaluates a word on arbitrary generator images (ElemIds of this group).
  ElemId evaluate(const Word& w, std::span<const ElemId> gen_images) const;

  /// For subgroups built by subgroup(): the ElemId of each element in the parent.
  const std::vector<ElemId>& parent_ids() const { return parent_ids_; }

  /// Builds the subgroup consisting of the listed elements, which must be
  /// closed under multiplication. The order of `members` becomes the
  /// canonical order and must start with the identity.
  Group subgroup(std::span<const ElemId> members) const;

 private:
  friend Group generate_group(std::span<const Perm>, std::size_t, const GroupOptions&);

  void add_element(std::span<const Point> images);
  void rehash();
  void finalize(const GroupOptions& options);
  ElemId lookup_product(ElemId a, ElemId b) const;

  std::size_t degree_ = 1;
  std::size_t count_ = 0;
  std::vector<Perm> generators_;
  std::vector<ElemId> generator_ids_;
  std::vector<Point> storage_;
  std::vector<ElemId> slots_;  // open addressing; kNoElem marks empty
  std::vector<ElemId> inverse_;
  std::vector<ElemId> right_gen_;
  std::vector<ElemId> table_;  // empty when order exceeds the table threshold
  std::vector<Word> relators_;
  std::vector<ElemId> parent_ids_;
};

/// Enumerates the group generated by `gens` by breadth-first closure from the
/// identity, multiplying on the right by generators in the given order. An
/// empty generator list yields the trivial group of degree max(1, degree).
Group generate_group(std::span<const Perm> gens, std::size_t degree = 1,
                     const GroupOptions& options = {});

inline Group generate_group(const std::vector<Perm>& gens, std::size_t degree = 1,
                            const GroupOptions& options = {}) {
  return generate_group(std::span<const Perm>(gens), degree, options);
}

/// Conjugacy class data; class index 0 is the identity class.
struct ClassData {
  std::vector<std::uint32_t> class_of;
  std::vector<ElemId> reps;  // least ElemId in each class
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> inverse_class;
  /// transversal[g] conjugates the class representative onto g:
  /// transversal[g] * rep * transversal[g]^-1 = g.
  std::vector<ElemId> transversal;

  std::size_t count() const { return reps.size(); }
};

ClassData conjugacy_classes(const Group& g);

/// All elements commuting with x, in the group's canonical order.
std::vector<ElemId> centralizer_elements(const Group& g, ElemId x);

/// C_G(x) as a Group whose elements inherit G's canonical order.
Group centralizer(const Group& g, ElemId x);

std::size_t element_order(const Group& g, ElemId x);

/// Generators for the subgroup formed by `members`, chosen greedily in
/// canonical order.
std::vector<ElemId> greedy_generators(const Group& g, std::span<const ElemId> members);

}  // namespace ginv
