#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <optional>
#include <vector>

#include "ginv/automorphisms.hpp"
#include "ginv/char_table.hpp"
#include "ginv/double_classes.hpp"
#include "ginv/group.hpp"

namespace ginv {

/// A simple object of Z(G): a conjugacy class with representative a and an
/// irreducible character of C_G(a).
struct CentreSimple {
  std::uint32_t class_index = 0;
  std::uint32_t irrep_index = 0;
  friend auto operator<=>(const CentreSimple&, const CentreSimple&) = default;
};

/// Square non-negative integer matrix indexed by centre simples.
struct MIMatrix {
  std::vector<std::vector<int>> entries;

  std::size_t size() const { return entries.size(); }
  bool is_identity() const;
  bool is_permutation() const;
};

struct CentreOptions {
  std::size_t max_order = 200;
  CharTableOptions char_table;
  DoubleClassOptions double_classes;
  /// Overrides character_table() for centralizers, e.g. to consult a cache.
  std::function<CharacterTable(const Group&, const ClassData&)> table_provider;
};

/// Simple objects and characters of the Drinfeld centre of a finite group.
///
/// Characters are functions on commuting pairs, constant on double classes;
/// they are stored as one value per double class, all over the common order
/// exp(G). Simples are identified with each other by exact comparison of
/// these vectors.
class DrinfeldCentre {
 public:
  /// Throws SizeLimitError above options.max_order.
  DrinfeldCentre(const Group& g, const CentreOptions& options = {});

  const Group& group() const { return g_; }
  const ClassData& classes() const { return classes_; }
  const DoubleClassData& double_classes() const { return dclasses_; }
  const std::vector<CentreSimple>& simples() const { return simples_; }
  std::size_t simple_index(const CentreSimple& s) const;
  std::uint32_t exponent() const { return exponent_; }

  /// Centralizer of the class representative, and its character table.
  const Group& centralizer_of_class(std::size_t cls) const { return centralizers_[cls]; }
  const CharacterTable& centralizer_table(std::size_t cls) const { return tables_[cls]; }

  /// chi_s(f, g) = trace of g on the f-graded piece, computed directly as
  /// chi_rho(x^-1 g x) for a conjugator x with x a x^-1 = f (0 if f is not
  /// conjugate to a). Throws std::invalid_argument if f, g do not commute.
  Cyclo character(const CentreSimple& s, ElemId f, ElemId g) const;
  /// Same, with an explicit conjugator x satisfying x a x^-1 = f.
  Cyclo character_via(const CentreSimple& s, ElemId f, ElemId g, ElemId x) const;

  /// Character values of simple s, one per double class.
  const std::vector<Cyclo>& character_values(std::size_t simple) const { return values_[simple]; }
  /// Value of simple s at any commuting pair, via the stored double-class vector.
  const Cyclo& value_at(std::size_t simple, ElemId f, ElemId g) const;

  /// sum over f1 f2 = f with f1, f2 in C(g) of chi_s(f1, g) chi_t(f2, g).
  Cyclo tensor_character(const CentreSimple& s, const CentreSimple& t, ElemId f, ElemId g) const;

  /// The simple whose character is (f, g) -> chi_s(f^-1, g^-1).
  CentreSimple dual_simple(const CentreSimple& s) const;
  /// The simple whose character is (f, g) -> chi_s(phi(f), phi(g)).
  CentreSimple apply_autoequivalence(const Automorphism& phi, const CentreSimple& s) const;

  /// M[i][j] = 1 iff simple j is the dual of F_phi(simple i).
  MIMatrix modular_invariant_matrix(const Automorphism& phi) const;

  /// Simple whose character vector equals `values` exactly; throws
  /// std::logic_error when there is no match or more than one.
  std::size_t match(const std::vector<Cyclo>& values) const;

 private:
  const Group& g_;
  ClassData classes_;
  DoubleClassData dclasses_;
  std::uint32_t exponent_ = 1;
  std::vector<Group> centralizers_;
  std::vector<ClassData> centralizer_classes_;
  std::vector<CharacterTable> tables_;
  std::vector<std::vector<ElemId>> local_index_;  // per class: parent id -> centralizer id
  std::vector<CentreSimple> simples_;
  std::vector<std::vector<Cyclo>> values_;
  std::vector<std::vector<std::vector<std::int64_t>>> keys_;
};

std::vector<CentreSimple> centre_simples(const Group& g, const CentreOptions& options = {});

enum class Physicality { yes, no, unknown };

struct PhysicalityVerdict {
  Physicality physical = Physicality::unknown;
  std::optional<Automorphism> witness;
  /// Whether the witness's modular invariant matrix is the identity; set
  /// only when a witness exists and |G| is within the centre cap.
  std::optional<bool> cross_check;
  std::uint64_t search_nodes = 0;
  /// "identity", "inversion" or "search".
  std::string witness_source;
  /// Outcome of the class-inverting stage that precedes the double search.
  Physicality class_inverting = Physicality::unknown;
  std::optional<Automorphism> class_witness;
};

struct VerdictOptions {
  SearchOptions search;
  CentreOptions centre;
};

/// Decides whether the diagonal modular invariant of Z(G) is physical, i.e.
/// whether G has a double class-inverting automorphism. The identity and (for
/// abelian G) inversion are tried before the general search.
PhysicalityVerdict diagonal_physical(const Group& g, const VerdictOptions& options = {});

}  // namespace ginv
