#include "ginv/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace ginv {
namespace {

std::uint64_t hash_images(std::span<const Point> images) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : images) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h ^ (h >> 29);
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("bad letter in word: " + std::string(text));
    int letter = std::islower(static_cast<unsigned char>(c)) ? (c - 'a' + 1) : -(c - 'A' + 1);
    ++i;
    long repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("missing exponent in word: " + std::string(text));
      repeat = std::stol(std::string(text.substr(start, i - start)));
    }
    for (long r = 0; r < repeat; ++r) w.push_back(letter);
  }
  return w;
}

Perm Group::element(ElemId x) const {
  auto img = images(x);
  return Perm(std::vector<Point>(img.begin(), img.end()));
}

std::optional<ElemId> Group::find(std::span<const Point> img) const {
  if (img.size() != degree_) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash_images(img) & mask;; s = (s + 1) & mask) {
    ElemId id = slots_[s];
    if (id == kNoElem) return std::nullopt;
    auto cand = images(id);
    if (std::equal(cand.begin(), cand.end(), img.begin())) return id;
  }
}

std::optional<ElemId> Group::find(const Perm& p) const { return find(p.images()); }

ElemId Group::index_of(const Perm& p) const {
  auto id = find(p);
  if (!id) throw std::invalid_argument("permutation " + p.to_cycle_string() + " is not in the group");
  return *id;
}

void Group::rehash() {
  std::size_t cap = 16;
  while (cap < 2 * (count_ + 1)) cap <<= 1;
  slots_.assign(cap, kNoElem);
  const std::size_t mask = cap - 1;
  for (ElemId id = 0; id < count_; ++id) {
    std::size_t s = hash_images(images(id)) & mask;
    while (slots_[s] != kNoElem) s = (s + 1) & mask;
    slots_[s] = id;
  }
}

void Group::add_element(std::span<const Point> img) {
  storage_.insert(storage_.end(), img.begin(), img.end());
  ++count_;
  if (slots_.size() < 2 * count_) {
    rehash();
    return;
  }
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_images(img) & mask;
  while (slots_[s] != kNoElem) s = (s + 1) & mask;
  slots_[s] = static_cast<ElemId>(count_ - 1);
}

ElemId Group::lookup_product(ElemId a, ElemId b) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  auto pa = images(a);
  auto pb = images(b);
  for (std::size_t x = 0; x < degree_; ++x) buf[x] = pa[pb[x]];
  auto id = find(buf);
  if (!id) throw std::logic_error("Group: product escaped the element list");
  return *id;
}

ElemId Group::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * count_ + b];
  return lookup_product(a, b);
}

ElemId Group::pow(ElemId x, long long e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  ElemId acc = identity();
  ElemId base = x;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool Group::commute(ElemId a, ElemId b) const {
  if (!table_.empty()) return mul(a, b) == mul(b, a);
  auto pa = images(a);
  auto pb = images(b);
  for (std::size_t x = 0; x < degree_; ++x)
    if (pa[pb[x]] != pb[pa[x]]) return false;
  return true;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < generator_ids_.size(); ++i)
    for (std::size_t j = i + 1; j < generator_ids_.size(); ++j)
      if (!commute(generator_ids_[i], generator_ids_[j])) return false;
  return true;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (ElemId x = 0; x < count_; ++x) e = std::lcm(e, element(x).order());
  return e;
}

void Group::set_relators(std::vector<Word> relators) {
  std::vector<ElemId> gens(generator_ids_);
  for (const Word& w : relators) {
    for (int letter : w) {
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators_.size())
        throw std::invalid_argument("relator uses an unknown generator");
    }
    if (evaluate(w, gens) != identity())
      throw std::invalid_argument("relator does not hold on the generators");
  }
  relators_ = std::move(relators);
}

ElemId Group::evaluate(const Word& w, std::span<const ElemId> gen_images) const {
  ElemId acc = identity();
  for (int letter : w) {
    ElemId g = gen_images[static_cast<std::size_t>(std::abs(letter) - 1)];
    acc = mul(acc, letter > 0 ? g : inv(g));
  }
  return acc;
}

void Group::finalize(const GroupOptions& options) {
  rehash();
  generator_ids_.clear();
  for (const Perm& g : generators_) generator_ids_.push_back(index_of(g));

  std::vector<Point> buf(degree_);
  inverse_.assign(count_, 0);
  for (ElemId x = 0; x < count_; ++x) {
    auto img = images(x);
    for (std::size_t p = 0; p < degree_; ++p) buf[img[p]] = static_cast<Point>(p);
    inverse_[x] = *find(buf);
  }

  const std::size_t k = generators_.size();
  right_gen_.assign(k * count_, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (ElemId x = 0; x < count_; ++x) right_gen_[i * count_ + x] = lookup_product(x, generator_ids_[i]);

  table_.clear();
  if (count_ <= options.table_threshold) {
    // Fill row a along a spanning tree of the Cayley graph: a*(b*g) = (a*b)*g.
    std::vector<ElemId> tree_parent(count_, kNoElem);
    std::vector<std::uint32_t> tree_gen(count_, 0);
    std::vector<ElemId> order;
    order.reserve(count_);
    std::vector<bool> seen(count_, false);
    seen[0] = true;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      ElemId b = order[head];
      for (std::size_t i = 0; i < k; ++i) {
        ElemId c = right_gen_[i * count_ + b];
        if (!seen[c]) {
          seen[c] = true;
          tree_parent[c] = b;
          tree_gen[c] = static_cast<std::uint32_t>(i);
          order.push_back(c);
        }
      }
    }
    table_.assign(count_ * count_, 0);
    for (ElemId a = 0; a < count_; ++a) {
      ElemId* row = table_.data() + static_cast<std::size_t>(a) * count_;
      row[0] = a;
      for (std::size_t pos = 1; pos < order.size(); ++pos) {
        ElemId c = order[pos];
        row[c] = right_gen_[tree_gen[c] * count_ + row[tree_parent[c]]];
      }
    }
  }
}

Group generate_group(std::span<const Perm> gens, std::size_t degree, const GroupOptions& options) {
  Group g;
  std::size_t deg = std::max<std::size_t>(degree, 1);
  for (const Perm& p : gens) deg = std::max(deg, p.degree());
  for (const Perm& p : gens) {
    if (p.degree() != deg && !(p.degree() == 1 && p.is_identity()))
      throw std::invalid_argument("generate_group: generators have different degrees");
    g.generators_.push_back(p.degree() == deg ? p : p.extended(deg));
  }
  g.degree_ = deg;

  Perm id = Perm::identity(deg);
  g.add_element(id.images());
  std::vector<Point> buf(deg);
  for (std::size_t head = 0; head < g.count_; ++head) {
    for (const Perm& gen : g.generators_) {
      auto x = g.images(static_cast<ElemId>(head));
      for (std::size_t p = 0; p < deg; ++p) buf[p] = x[gen[p]];
      if (g.find(buf)) continue;
      if (g.count_ >= options.max_order)
        throw SizeLimitError("group order exceeds the element cap", options.max_order);
      g.add_element(buf);
    }
  }
  g.finalize(options);
  return g;
}

std::vector<ElemId> greedy_generators(const Group& g, std::span<const ElemId> members) {
  std::vector<ElemId> gens;
  std::vector<bool> inside(g.order(), false);
  inside[g.identity()] = true;
  std::vector<ElemId> closure{g.identity()};
  for (ElemId m : members) {
    if (inside[m]) continue;
    gens.push_back(m);
    // Re-close from scratch; subgroups here are small.
    std::fill(inside.begin(), inside.end(), false);
    closure.assign(1, g.identity());
    inside[g.identity()] = true;
    for (std::size_t head = 0; head < closure.size(); ++head) {
      for (ElemId s : gens) {
        ElemId y = g.mul(closure[head], s);
        if (!inside[y]) {
          inside[y] = true;
          closure.push_back(y);
        }
      }
    }
  }
  return gens;
}

Group Group::subgroup(std::span<const ElemId> members) const {
  if (members.empty() || members.front() != identity())
    throw std::invalid_argument("subgroup: member list must start with the identity");
  Group h;
  h.degree_ = degree_;
  h.storage_.reserve(members.size() * degree_);
  for (ElemId m : members) {
    auto img = images(m);
    h.storage_.insert(h.storage_.end(), img.begin(), img.end());
  }
  h.count_ = members.size();
  for (ElemId s : greedy_generators(*this, members)) h.generators_.push_back(element(s));
  GroupOptions opts;
  opts.max_order = members.size();
  h.finalize(opts);
  h.parent_ids_.assign(members.begin(), members.end());
  return h;
}

ClassData conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  ClassData cd;
  cd.class_of.assign(n, kUnset);
  cd.transversal.assign(n, kNoElem);
  const std::size_t k = g.num_generators();
  std::vector<ElemId> queue;
  for (ElemId start = 0; start < n; ++start) {
    if (cd.class_of[start] != kUnset) continue;
    auto cls = static_cast<std::uint32_t>(cd.reps.size());
    cd.reps.push_back(start);
    cd.class_of[start] = cls;
    cd.transversal[start] = g.identity();
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElemId x = queue[head];
      for (std::size_t i = 0; i < k; ++i) {
        ElemId s = g.generator_id(i);
        ElemId y = g.conj(s, x);
        if (cd.class_of[y] == kUnset) {
          cd.class_of[y] = cls;
          cd.transversal[y] = g.mul(s, cd.transversal[x]);
          queue.push_back(y);
        }
      }
    }
    cd.sizes.push_back(queue.size());
  }
  cd.inverse_class.resize(cd.reps.size());
  for (std::size_t c = 0; c < cd.reps.size(); ++c)
    cd.inverse_class[c] = cd.class_of[g.inv(cd.reps[c])];
  return cd;
}

std::vector<ElemId> centralizer_elements(const Group& g, ElemId x) {
  std::vector<ElemId> out;
  for (ElemId h = 0; h < g.order(); ++h)
    if (g.commute(h, x)) out.push_back(h);
  return out;
}

Group centralizer(const Group& g, ElemId x) {
  auto members = centralizer_elements(g, x);
  return g.subgroup(members);
}

std::size_t element_order(const Group& g, ElemId x) {
  std::size_t k = 1;
  for (ElemId y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

}  // namespace ginv
