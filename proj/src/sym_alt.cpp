#include "ginv/sym_alt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ginv/catalog.hpp"

namespace ginv {

CycleType::CycleType(std::vector<int> p) : parts(std::move(p)) {
  for (int v : parts)
    if (v < 1) throw std::invalid_argument("CycleType: parts must be positive");
  std::sort(parts.rbegin(), parts.rend());
}

int CycleType::n() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

bool CycleType::is_even_permutation() const {
  int t = 0;
  for (int v : parts) t += v - 1;
  return t % 2 == 0;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

CycleType cycle_type_of(const Perm& p) {
  std::vector<int> parts;
  for (std::size_t len : p.cycle_type()) parts.push_back(static_cast<int>(len));
  return CycleType(std::move(parts));
}

bool splits_in_alternating(const CycleType& t) {
  if (!t.is_even_permutation())
    throw std::invalid_argument("splits_in_alternating: " + t.to_string() + " is not an even type");
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (t.parts[i] % 2 == 0) return false;
    if (i > 0 && t.parts[i] == t.parts[i - 1]) return false;
  }
  return true;
}

bool an_self_inverse_parity(const CycleType& t) {
  if (!splits_in_alternating(t))
    throw std::invalid_argument("an_self_inverse_parity: " + t.to_string() + " does not split");
  int transpositions = 0;
  for (int v : t.parts) transpositions += (v - 1) / 2;
  return transpositions % 2 == 0;
}

std::string to_string(AnInverting c) {
  switch (c) {
    case AnInverting::identity_inverting: return "identity";
    case AnInverting::phi_inverting: return "phi";
    case AnInverting::no_inverting: return "none";
  }
  return "?";
}

namespace {

void distinct_odd(int remaining, int max_part, std::vector<int>& current, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  int start = std::min(max_part, remaining);
  if (start % 2 == 0) --start;
  for (int part = start; part >= 1; part -= 2) {
    current.push_back(part);
    distinct_odd(remaining - part, part - 2, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<CycleType> splitting_types(int n) {
  if (n < 1) throw std::invalid_argument("splitting_types: n must be positive");
  std::vector<CycleType> out;
  std::vector<int> current;
  distinct_odd(n, n, current, out);
  return out;
}

AnInverting an_classification_closed_form(int n) {
  bool any_even = false;
  bool any_odd = false;
  for (const CycleType& t : splitting_types(n)) {
    if (an_self_inverse_parity(t)) {
      any_even = true;
    } else {
      any_odd = true;
    }
  }
  if (any_even && any_odd) return AnInverting::no_inverting;
  return any_odd ? AnInverting::phi_inverting : AnInverting::identity_inverting;
}

AnInverting an_classification(int n, const SearchOptions& options) {
  if (n != 6) return an_classification_closed_form(n);
  const Group a6 = build(GroupSpec::alternating(6));
  const ClassData classes = conjugacy_classes(a6);
  if (is_ambivalent(a6, classes)) return AnInverting::identity_inverting;
  // Conjugation by the transposition (1 2).
  const Perm t = parse_cycles("(1 2)", 6);
  Automorphism phi;
  for (std::size_t i = 0; i < a6.num_generators(); ++i)
    phi.gen_images.push_back(a6.index_of(t * a6.element(a6.generator_id(i)) * t));
  phi = *Automorphism::from_generator_images(a6, phi.gen_images);
  if (is_class_inverting(a6, classes, phi)) return AnInverting::phi_inverting;
  SearchResult r = exists_class_inverting(a6, classes, options);
  if (r.status == SearchStatus::none) return AnInverting::no_inverting;
  throw std::logic_error("an_classification: A6 has a class-inverting automorphism outside S6");
}

}  // namespace ginv
