#include "ginv/drinfeld_centre.hpp"

#include <map>
#include <stdexcept>

namespace ginv {

bool MIMatrix::is_identity() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool MIMatrix::is_permutation() const {
  const std::size_t n = entries.size();
  std::vector<int> col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) return false;
    int row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (entries[i][j] != 0 && entries[i][j] != 1) return false;
      row += entries[i][j];
      col[j] += entries[i][j];
    }
    if (row != 1) return false;
  }
  for (int c : col)
    if (c != 1) return false;
  return true;
}

DrinfeldCentre::DrinfeldCentre(const Group& g, const CentreOptions& options) : g_(g) {
  if (g.order() > options.max_order)
    throw SizeLimitError("Drinfeld centre: group order exceeds the centre cap", options.max_order);
  classes_ = conjugacy_classes(g);
  dclasses_ = ginv::double_classes(g, classes_, options.double_classes);
  exponent_ = static_cast<std::uint32_t>(g.exponent());

  const std::size_t r = classes_.count();
  centralizers_.reserve(r);
  for (std::size_t c = 0; c < r; ++c) {
    auto members = centralizer_elements(g, classes_.reps[c]);
    centralizers_.push_back(g.subgroup(members));
    centralizer_classes_.push_back(conjugacy_classes(centralizers_.back()));
    tables_.push_back(options.table_provider
                          ? options.table_provider(centralizers_.back(), centralizer_classes_.back())
                          : character_table(centralizers_.back(), centralizer_classes_.back(), options.char_table));
    std::vector<ElemId> local(g.order(), kNoElem);
    for (ElemId i = 0; i < members.size(); ++i) local[members[i]] = i;
    local_index_.push_back(std::move(local));
    for (std::uint32_t irr = 0; irr < tables_.back().size(); ++irr)
      simples_.push_back({static_cast<std::uint32_t>(c), irr});
  }

  const auto& reps = dclasses_.reps();
  for (const CentreSimple& s : simples_) {
    std::vector<Cyclo> row;
    std::vector<std::vector<std::int64_t>> key;
    row.reserve(reps.size());
    for (auto [f, h] : reps) {
      row.push_back(character(s, f, h));
      key.push_back(row.back().normal_form());
    }
    values_.push_back(std::move(row));
    keys_.push_back(std::move(key));
  }
}

std::size_t DrinfeldCentre::simple_index(const CentreSimple& s) const {
  for (std::size_t i = 0; i < simples_.size(); ++i)
    if (simples_[i] == s) return i;
  throw std::invalid_argument("simple_index: unknown simple");
}

Cyclo DrinfeldCentre::character_via(const CentreSimple& s, ElemId f, ElemId g, ElemId x) const {
  if (!g_.commute(f, g)) throw std::invalid_argument("centre character: f and g do not commute");
  if (classes_.class_of[f] != s.class_index) return Cyclo(exponent_);
  const ElemId a = classes_.reps[s.class_index];
  if (g_.conj(x, a) != f) throw std::invalid_argument("centre character: x does not conjugate a onto f");
  const ElemId c = g_.mul(g_.mul(g_.inv(x), g), x);
  const ElemId local = local_index_[s.class_index][c];
  if (local == kNoElem) throw std::logic_error("centre character: conjugated element left the centralizer");
  const auto local_class = centralizer_classes_[s.class_index].class_of[local];
  return tables_[s.class_index].value(s.irrep_index, local_class).lifted(exponent_);
}

Cyclo DrinfeldCentre::character(const CentreSimple& s, ElemId f, ElemId g) const {
  if (!g_.commute(f, g)) throw std::invalid_argument("centre character: f and g do not commute");
  if (classes_.class_of[f] != s.class_index) return Cyclo(exponent_);
  return character_via(s, f, g, classes_.transversal[f]);
}

const Cyclo& DrinfeldCentre::value_at(std::size_t simple, ElemId f, ElemId g) const {
  return values_[simple][dclasses_.class_of(f, g)];
}

Cyclo DrinfeldCentre::tensor_character(const CentreSimple& s, const CentreSimple& t, ElemId f, ElemId g) const {
  if (!g_.commute(f, g)) throw std::invalid_argument("tensor character: f and g do not commute");
  const std::size_t si = simple_index(s);
  const std::size_t ti = simple_index(t);
  Cyclo sum(exponent_);
  for (ElemId f1 : dclasses_.centralizer_of(g)) {
    const ElemId f2 = g_.mul(g_.inv(f1), f);
    const Cyclo& a = value_at(si, f1, g);
    if (a.is_zero()) continue;
    sum += a * value_at(ti, f2, g);
  }
  return sum;
}

std::size_t DrinfeldCentre::match(const std::vector<Cyclo>& values) const {
  std::vector<std::vector<std::int64_t>> key;
  key.reserve(values.size());
  for (const Cyclo& v : values) key.push_back(v.lifted(exponent_).normal_form());
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] != key) continue;
    if (found) throw std::logic_error("centre: character matches more than one simple");
    found = i;
  }
  if (!found) throw std::logic_error("centre: character matches no simple");
  return *found;
}

CentreSimple DrinfeldCentre::dual_simple(const CentreSimple& s) const {
  const auto& src = values_[simple_index(s)];
  std::vector<Cyclo> v;
  v.reserve(src.size());
  for (std::size_t d = 0; d < src.size(); ++d) v.push_back(src[dclasses_.inverse_dclass()[d]]);
  return simples_[match(v)];
}

CentreSimple DrinfeldCentre::apply_autoequivalence(const Automorphism& phi, const CentreSimple& s) const {
  const auto& src = values_[simple_index(s)];
  std::vector<Cyclo> v;
  v.reserve(src.size());
  for (auto [f, h] : dclasses_.reps()) v.push_back(src[dclasses_.class_of(phi(f), phi(h))]);
  return simples_[match(v)];
}

MIMatrix DrinfeldCentre::modular_invariant_matrix(const Automorphism& phi) const {
  const std::size_t n = simples_.size();
  MIMatrix m;
  m.entries.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    CentreSimple target = dual_simple(apply_autoequivalence(phi, simples_[i]));
    m.entries[i][simple_index(target)] = 1;
  }
  return m;
}

std::vector<CentreSimple> centre_simples(const Group& g, const CentreOptions& options) {
  return DrinfeldCentre(g, options).simples();
}

PhysicalityVerdict diagonal_physical(const Group& g, const VerdictOptions& options) {
  PhysicalityVerdict v;
  const ClassData classes = conjugacy_classes(g);

  std::optional<DoubleClassData> dclasses;
  auto need_dclasses = [&]() -> const DoubleClassData& {
    if (!dclasses) dclasses = double_classes(g, classes, options.centre.double_classes);
    return *dclasses;
  };

  if (is_ambivalent(g, classes) && is_doubly_ambivalent(g, need_dclasses())) {
    v.physical = Physicality::yes;
    v.witness = Automorphism::identity(g);
    v.witness_source = "identity";
    v.class_inverting = Physicality::yes;
    v.class_witness = v.witness;
  } else if (g.is_abelian()) {
    v.physical = Physicality::yes;
    v.witness = Automorphism::inversion(g);
    v.witness_source = "inversion";
    v.class_inverting = Physicality::yes;
    v.class_witness = v.witness;
  } else {
    // A double class-inverting automorphism is in particular class-inverting.
    SearchResult single = exists_class_inverting(g, classes, options.search);
    v.search_nodes += single.nodes;
    if (single.status == SearchStatus::none) {
      v.physical = Physicality::no;
      v.class_inverting = Physicality::no;
    } else if (single.status == SearchStatus::budget_exceeded) {
      v.physical = Physicality::unknown;
    } else {
      v.class_inverting = Physicality::yes;
      v.class_witness = single.witness;
      SearchResult dbl = exists_double_class_inverting(g, classes, need_dclasses(), options.search);
      v.search_nodes += dbl.nodes;
      if (dbl.status == SearchStatus::found) {
        v.physical = Physicality::yes;
        v.witness = std::move(dbl.witness);
        v.witness_source = "search";
      } else {
        v.physical = dbl.status == SearchStatus::none ? Physicality::no : Physicality::unknown;
      }
    }
  }

  if (v.witness && g.order() <= options.centre.max_order) {
    DrinfeldCentre centre(g, options.centre);
    v.cross_check = centre.modular_invariant_matrix(*v.witness).is_identity();
  }
  return v;
}

}  // namespace ginv
