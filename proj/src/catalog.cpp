#include "ginv/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ginv {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer in group spec \"" + std::string(context) + "\"");
  return value;
}

Perm cycle_perm(std::size_t degree, std::size_t first, std::size_t len) {
  std::vector<std::size_t> c(len);
  std::iota(c.begin(), c.end(), first);
  return Perm::from_cycles(degree, {c});
}

// Relators w^k for short words w, where k is the order of w in g. They hold
// in g by construction and prune automorphism searches cheaply.
std::vector<Word> short_word_relators(const Group& g) {
  std::vector<Word> words;
  const int k = static_cast<int>(g.num_generators());
  for (int i = 1; i <= k; ++i) words.push_back({i});
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      words.push_back({i, j});
      words.push_back({i, -j});
      words.push_back({i, j, -i, -j});
      words.push_back({i, i, j});
      words.push_back({i, j, j});
    }
  std::vector<Word> relators;
  std::vector<ElemId> gens;
  for (std::size_t i = 0; i < g.num_generators(); ++i) gens.push_back(g.generator_id(i));
  for (const Word& w : words) {
    std::size_t ord = element_order(g, g.evaluate(w, gens));
    Word r;
    for (std::size_t t = 0; t < ord; ++t) r.insert(r.end(), w.begin(), w.end());
    relators.push_back(std::move(r));
  }
  return relators;
}

std::vector<Word> words(std::initializer_list<std::string_view> texts) {
  std::vector<Word> out;
  for (auto t : texts) out.push_back(parse_word(t));
  return out;
}

// Regular representation of Q8 on its 8 elements, labelled
// 0:1 1:i 2:j 3:k 4:-1 5:-i 6:-j 7:-k.
std::vector<Perm> q8_generators() {
  // Unit products among {1,i,j,k}: sign and result.
  static constexpr std::array<std::array<int, 4>, 4> unit = {{
      {0, 1, 2, 3},
      {1, 4, 3, 6},  // i*1=i, i*i=-1, i*j=k, i*k=-j
      {2, 7, 4, 1},  // j*1=j, j*i=-k, j*j=-1, j*k=i
      {3, 2, 5, 4},  // k*1=k, k*i=j, k*j=-i, k*k=-1
  }};
  auto mul = [](int x, int y) {
    int sign = (x >= 4) ^ (y >= 4);
    int r = unit[x % 4][y % 4];
    if (sign) r = (r + 4) % 8;
    return r;
  };
  std::vector<Perm> gens;
  for (int g : {1, 2}) {
    std::vector<Point> img(8);
    for (int h = 0; h < 8; ++h) img[h] = static_cast<Point>(mul(g, h));
    gens.emplace_back(img);
  }
  return gens;
}

// Heisenberg group of upper unitriangular 3x3 matrices over Z/p, acting on
// itself by left translation. Element (x, y, z) is indexed x + p*y + p^2*z.
std::vector<Perm> heisenberg_generators(int p) {
  auto index = [p](int x, int y, int z) { return static_cast<Point>(x + p * (y + p * z)); };
  std::vector<Perm> gens;
  for (auto [gx, gy] : {std::pair{1, 0}, std::pair{0, 1}}) {
    std::vector<Point> img(static_cast<std::size_t>(p) * p * p);
    for (int z = 0; z < p; ++z)
      for (int y = 0; y < p; ++y)
        for (int x = 0; x < p; ++x)
          img[index(x, y, z)] = index((gx + x) % p, (gy + y) % p, (z + gx * y) % p);
    gens.emplace_back(img);
  }
  return gens;
}

}  // namespace

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroupSpec parse_group_spec(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty group spec");

  if (text.starts_with("perm:")) {
    std::string_view rest = text.substr(5);
    std::vector<std::string_view> parts;
    std::size_t depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')') {
        if (depth == 0) throw ParseError("unbalanced parentheses in \"" + std::string(original) + "\"");
        --depth;
      }
      if (rest[i] == ',' && depth == 0) {
        parts.push_back(rest.substr(start, i - start));
        start = i + 1;
      }
    }
    parts.push_back(rest.substr(start));
    std::vector<Perm> gens;
    std::size_t degree = 1;
    for (auto part : parts) {
      part = trim(part);
      if (part.empty()) throw ParseError("empty generator in \"" + std::string(original) + "\"");
      gens.push_back(parse_cycles(part));
      degree = std::max(degree, gens.back().degree());
    }
    for (Perm& g : gens) g = g.extended(degree);
    return GroupSpec::explicit_gens(std::move(gens));
  }

  if (text.starts_with("Ab[")) {
    if (text.back() != ']') throw ParseError("expected ']' in \"" + std::string(original) + "\"");
    std::string_view body = text.substr(3, text.size() - 4);
    std::vector<int> orders;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == ',') {
        orders.push_back(parse_int(body.substr(start, i - start), original));
        start = i + 1;
      }
    }
    for (int o : orders)
      if (o < 1) throw ParseError("abelian factor orders must be positive");
    return GroupSpec::abelian(std::move(orders));
  }

  if (text == "Q8") return GroupSpec::q8();
  if (text == "M11") return GroupSpec::m11();
  if (text == "F21") return GroupSpec::f21();

  const char head = text.front();
  std::string_view tail = text.substr(1);
  if (head == 'S' || head == 'A' || head == 'C' || head == 'D' || head == 'H') {
    int n = parse_int(tail, original);
    if (n < 1) throw ParseError("group parameter must be positive in \"" + std::string(original) + "\"");
    switch (head) {
      case 'S': return GroupSpec::symmetric(n);
      case 'A': return GroupSpec::alternating(n);
      case 'C': return GroupSpec::cyclic(n);
      case 'D': return GroupSpec::dihedral(n);
      default: {
        int p = static_cast<int>(std::lround(std::cbrt(static_cast<double>(n))));
        if (static_cast<long>(p) * p * p != n || !is_prime(static_cast<std::size_t>(p)) || p == 2)
          throw ParseError("H<order> needs the cube of an odd prime, got \"" + std::string(original) + "\"");
        return GroupSpec::heisenberg(p);
      }
    }
  }
  throw ParseError("unrecognised group spec \"" + std::string(original) + "\"");
}

std::string to_string(const GroupSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case GroupKind::symmetric: os << 'S' << spec.params.at(0); break;
    case GroupKind::alternating: os << 'A' << spec.params.at(0); break;
    case GroupKind::cyclic: os << 'C' << spec.params.at(0); break;
    case GroupKind::dihedral: os << 'D' << spec.params.at(0); break;
    case GroupKind::quaternion_q8: os << "Q8"; break;
    case GroupKind::mathieu11: os << "M11"; break;
    case GroupKind::frobenius21: os << "F21"; break;
    case GroupKind::heisenberg: {
      long p = spec.params.at(0);
      os << 'H' << p * p * p;
      break;
    }
    case GroupKind::abelian_product: {
      os << "Ab[";
      for (std::size_t i = 0; i < spec.params.size(); ++i) os << (i ? "," : "") << spec.params[i];
      os << ']';
      break;
    }
    case GroupKind::explicit_generators: {
      os << "perm: ";
      for (std::size_t i = 0; i < spec.generators.size(); ++i)
        os << (i ? ", " : "") << spec.generators[i].to_cycle_string();
      break;
    }
  }
  return os.str();
}

Group build(const GroupSpec& spec, const GroupOptions& options) {
  auto param = [&](std::size_t i) {
    if (i >= spec.params.size()) throw std::invalid_argument("group spec is missing a parameter");
    int v = spec.params[i];
    if (v < 1) throw std::invalid_argument("group parameters must be positive");
    return static_cast<std::size_t>(v);
  };

  switch (spec.kind) {
    case GroupKind::symmetric: {
      std::size_t n = param(0);
      std::vector<Perm> gens;
      if (n >= 2) gens.push_back(cycle_perm(n, 0, 2));
      if (n >= 3) gens.push_back(cycle_perm(n, 0, n));
      Group g = generate_group(gens, n, options);
      if (g.num_generators() > 0) g.set_relators(short_word_relators(g));
      return g;
    }
    case GroupKind::alternating: {
      std::size_t n = param(0);
      std::vector<Perm> gens;
      if (n >= 3) gens.push_back(cycle_perm(n, 0, 3));
      if (n >= 4) {
        if (n % 2 == 1) {
          gens.push_back(cycle_perm(n, 2, n - 2));
        } else {
          gens.push_back(cycle_perm(n, 0, 2) * cycle_perm(n, 2, n - 2));
        }
      }
      Group g = generate_group(gens, n, options);
      if (g.num_generators() > 0) g.set_relators(short_word_relators(g));
      return g;
    }
    case GroupKind::cyclic: {
      std::size_t n = param(0);
      std::vector<Perm> gens;
      if (n >= 2) gens.push_back(cycle_perm(n, 0, n));
      Group g = generate_group(gens, n, options);
      if (g.num_generators() > 0) g.set_relators(short_word_relators(g));
      return g;
    }
    case GroupKind::abelian_product: {
      if (spec.params.empty()) throw std::invalid_argument("abelian product needs at least one factor");
      std::size_t degree = 0;
      for (std::size_t i = 0; i < spec.params.size(); ++i) degree += param(i);
      std::vector<Perm> gens;
      std::size_t offset = 0;
      for (std::size_t i = 0; i < spec.params.size(); ++i) {
        std::size_t len = param(i);
        gens.push_back(len >= 2 ? cycle_perm(degree, offset, len) : Perm::identity(degree));
        offset += len;
      }
      Group g = generate_group(gens, degree, options);
      g.set_relators(short_word_relators(g));
      return g;
    }
    case GroupKind::dihedral: {
      std::size_t n = param(0);
      std::vector<Perm> gens;
      std::size_t degree = n;
      if (n == 1) {
        // Order 2.
        degree = 2;
        gens = {Perm::identity(2), cycle_perm(2, 0, 2)};
      } else if (n == 2) {
        // Klein four-group.
        degree = 4;
        gens = {cycle_perm(4, 0, 2), cycle_perm(4, 2, 2)};
      } else {
        std::vector<Point> refl(n);
        for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
        gens = {cycle_perm(n, 0, n), Perm(refl)};
      }
      Group g = generate_group(gens, degree, options);
      // <r, s | r^n, s^2, (sr)^2>
      Word rn(n, 1);
      g.set_relators({rn, parse_word("bb"), parse_word("baba")});
      return g;
    }
    case GroupKind::quaternion_q8: {
      Group g = generate_group(q8_generators(), 8, options);
      // <i, j | i^4, i^2 j^-2, j i j^-1 i>
      g.set_relators(words({"a^4", "aaBB", "baBa"}));
      return g;
    }
    case GroupKind::mathieu11: {
      std::vector<Perm> gens = {parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)"),
                                parse_cycles("(3 7 11 8)(4 10 5 6)", 11)};
      Group g = generate_group(gens, 11, options);
      if (g.order() != 7920) throw std::logic_error("M11 generators produced the wrong order");
      std::vector<Word> rel = words({"a^11", "b^4"});
      auto power = [](std::string_view w, int k) {
        Word base = parse_word(w);
        Word out;
        for (int i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
        return out;
      };
      rel.push_back(power("ab", 11));
      rel.push_back(power("abb", 3));
      rel.push_back(power("aab", 8));
      rel.push_back(power("aBab", 6));
      rel.push_back(power("abAB", 5));
      g.set_relators(std::move(rel));
      return g;
    }
    case GroupKind::heisenberg: {
      std::size_t p = param(0);
      if (p == 2 || !is_prime(p)) throw std::invalid_argument("Heisenberg(p) requires an odd prime p");
      if (p * p * p > options.max_order)
        throw SizeLimitError("Heisenberg group order exceeds the element cap", options.max_order);
      Group g = generate_group(heisenberg_generators(static_cast<int>(p)), p * p * p, options);
      // z = [x, y] is central of order p.
      Word xp(p, 1), yp(p, 2), z = parse_word("abAB"), zp;
      for (std::size_t i = 0; i < p; ++i) zp.insert(zp.end(), z.begin(), z.end());
      Word xz = parse_word("a abAB A baBA");
      Word yz = parse_word("b abAB B baBA");
      g.set_relators({xp, yp, zp, xz, yz});
      return g;
    }
    case GroupKind::frobenius21: {
      std::vector<Perm> gens = {parse_cycles("(1 2 3 4 5 6 7)"), parse_cycles("(2 3 5)(4 7 6)", 7)};
      Group g = generate_group(gens, 7, options);
      // <a, b | a^7, b^3, b a b^-1 a^-2>
      g.set_relators(words({"a^7", "b^3", "baBAA"}));
      return g;
    }
    case GroupKind::explicit_generators: {
      std::size_t degree = 1;
      for (const Perm& p : spec.generators) degree = std::max(degree, p.degree());
      std::vector<Perm> gens;
      for (const Perm& p : spec.generators) gens.push_back(p.extended(degree));
      return generate_group(gens, degree, options);
    }
  }
  throw std::logic_error("unknown group kind");
}

std::size_t sylow_count(const Group& g, std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_count: p must be prime");
  const std::size_t n = g.order();
  if (n % p != 0) throw std::invalid_argument("sylow_count: p does not divide |G|");
  if ((n / p) % p == 0)
    throw std::invalid_argument("sylow_count: only the case p^2 not dividing |G| is supported");
  std::size_t count = 0;
  for (ElemId x = 0; x < n; ++x)
    if (element_order(g, x) == p) ++count;
  return count / (p - 1);
}

std::size_t cyclic_normalizer_order(const Group& g, ElemId x) {
  std::vector<bool> in_subgroup(g.order(), false);
  for (ElemId y = g.identity();;) {
    in_subgroup[y] = true;
    y = g.mul(y, x);
    if (y == g.identity()) break;
  }
  std::size_t count = 0;
  for (ElemId h = 0; h < g.order(); ++h)
    if (in_subgroup[g.conj(h, x)]) ++count;
  return count;
}

}  // namespace ginv
