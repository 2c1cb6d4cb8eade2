#include "ginv/automorphisms.hpp"

#include <algorithm>

namespace ginv {

std::optional<std::vector<ElemId>> extend_generator_images(const Group& g, std::span<const ElemId> images) {
  const std::size_t n = g.order();
  const std::size_t k = g.num_generators();
  if (images.size() != k) throw std::invalid_argument("extend_generator_images: wrong number of images");
  std::vector<ElemId> map(n, kNoElem);
  std::vector<bool> used(n, false);
  map[g.identity()] = g.identity();
  used[g.identity()] = true;
  std::vector<ElemId> queue{g.identity()};
  queue.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElemId x = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      const ElemId y = g.mul_gen(x, i);
      const ElemId target = g.mul(map[x], images[i]);
      if (map[y] == kNoElem) {
        if (used[target]) return std::nullopt;
        map[y] = target;
        used[target] = true;
        queue.push_back(y);
      } else if (map[y] != target) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) throw std::logic_error("extend_generator_images: generators do not generate the group");
  return map;
}

Automorphism Automorphism::identity(const Group& g) {
  Automorphism a;
  for (std::size_t i = 0; i < g.num_generators(); ++i) a.gen_images.push_back(g.generator_id(i));
  a.full_map.resize(g.order());
  for (ElemId x = 0; x < g.order(); ++x) a.full_map[x] = x;
  return a;
}

Automorphism Automorphism::inversion(const Group& g) {
  if (!g.is_abelian()) throw std::invalid_argument("inversion is an automorphism only for abelian groups");
  Automorphism a;
  for (std::size_t i = 0; i < g.num_generators(); ++i) a.gen_images.push_back(g.inv(g.generator_id(i)));
  a.full_map.resize(g.order());
  for (ElemId x = 0; x < g.order(); ++x) a.full_map[x] = g.inv(x);
  return a;
}

Automorphism Automorphism::conjugation(const Group& g, ElemId h) {
  Automorphism a;
  for (std::size_t i = 0; i < g.num_generators(); ++i) a.gen_images.push_back(g.conj(h, g.generator_id(i)));
  a.full_map.resize(g.order());
  for (ElemId x = 0; x < g.order(); ++x) a.full_map[x] = g.conj(h, x);
  return a;
}

std::optional<Automorphism> Automorphism::from_generator_images(const Group& g, std::span<const ElemId> images) {
  auto map = extend_generator_images(g, images);
  if (!map) return std::nullopt;
  Automorphism a;
  a.gen_images.assign(images.begin(), images.end());
  a.full_map = std::move(*map);
  return a;
}

Automorphism Automorphism::after(const Group& g, const Automorphism& inner) const {
  Automorphism a;
  for (std::size_t i = 0; i < g.num_generators(); ++i) a.gen_images.push_back(full_map[inner.gen_images[i]]);
  a.full_map.resize(g.order());
  for (ElemId x = 0; x < g.order(); ++x) a.full_map[x] = full_map[inner.full_map[x]];
  return a;
}

bool Automorphism::is_identity() const {
  for (ElemId x = 0; x < full_map.size(); ++x)
    if (full_map[x] != x) return false;
  return true;
}

std::vector<Automorphism> inner_automorphisms(const Group& g) {
  std::vector<Automorphism> out;
  std::vector<std::vector<ElemId>> seen;
  for (ElemId h = 0; h < g.order(); ++h) {
    std::vector<ElemId> images;
    for (std::size_t i = 0; i < g.num_generators(); ++i) images.push_back(g.conj(h, g.generator_id(i)));
    if (std::find(seen.begin(), seen.end(), images) != seen.end()) continue;
    seen.push_back(images);
    out.push_back(Automorphism::conjugation(g, h));
  }
  return out;
}

bool is_class_inverting(const Group& g, const ClassData& classes, const Automorphism& phi) {
  (void)g;
  for (std::size_t c = 0; c < classes.count(); ++c)
    if (classes.class_of[phi(classes.reps[c])] != classes.inverse_class[c]) return false;
  return true;
}

bool is_class_preserving(const Group& g, const ClassData& classes, const Automorphism& phi) {
  (void)g;
  for (std::size_t c = 0; c < classes.count(); ++c)
    if (classes.class_of[phi(classes.reps[c])] != c) return false;
  return true;
}

bool is_double_class_inverting(const Group& g, const DoubleClassData& dclasses, const Automorphism& phi) {
  (void)g;
  const auto& reps = dclasses.reps();
  for (std::size_t d = 0; d < reps.size(); ++d) {
    auto [f, h] = reps[d];
    if (dclasses.class_of(phi(f), phi(h)) != dclasses.inverse_dclass()[d]) return false;
  }
  return true;
}

bool is_double_class_preserving(const Group& g, const DoubleClassData& dclasses, const Automorphism& phi) {
  (void)g;
  const auto& reps = dclasses.reps();
  for (std::size_t d = 0; d < reps.size(); ++d) {
    auto [f, h] = reps[d];
    if (dclasses.class_of(phi(f), phi(h)) != d) return false;
  }
  return true;
}

bool is_ambivalent(const Group& g, const ClassData& classes) {
  (void)g;
  for (std::size_t c = 0; c < classes.count(); ++c)
    if (classes.inverse_class[c] != c) return false;
  return true;
}

bool is_doubly_ambivalent(const Group& g, const DoubleClassData& dclasses) {
  (void)g;
  for (std::size_t d = 0; d < dclasses.count(); ++d)
    if (dclasses.inverse_dclass()[d] != d) return false;
  return true;
}

namespace {

enum class Mode { all, class_inverting, double_class_inverting };

// Backtracking over generator images. Candidate images are filtered by
// element order and class size (or by the inverse class in the inverting
// modes), by the class of products of pairs of images, and by relators as
// soon as all their letters are assigned. Leaves are validated by
// extend_generator_images, so relators only ever prune.
class Searcher {
 public:
  Searcher(const Group& g, const ClassData& classes, const DoubleClassData* dclasses, Mode mode,
           const SearchOptions& options)
      : g_(g), classes_(classes), dclasses_(dclasses), mode_(mode), options_(options) {
    if (!g.has_presentation() && g.order() > options.max_presentation_free_order)
      throw SizeLimitError("automorphism search without relators is limited by group order",
                           options.max_presentation_free_order);
    const std::size_t k = g.num_generators();
    order_.resize(g.order());
    for (ElemId x = 0; x < g.order(); ++x) order_[x] = g.element(x).order();

    gens_.resize(k);
    for (std::size_t i = 0; i < k; ++i) gens_[i] = g.generator_id(i);

    candidates_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto cls = classes.class_of[gens_[i]];
      if (mode == Mode::all) {
        for (ElemId x = 0; x < g.order(); ++x)
          if (order_[x] == order_[gens_[i]] && classes.sizes[classes.class_of[x]] == classes.sizes[cls])
            candidates_[i].push_back(x);
      } else {
        const auto target = classes.inverse_class[cls];
        if (i == 0) {
          // Inverting automorphisms are closed under composition with inner
          // ones, so the least witness maps generator 0 to the least element
          // of its target class.
          candidates_[i].push_back(classes.reps[target]);
        } else {
          for (ElemId x = 0; x < g.order(); ++x)
            if (classes.class_of[x] == target) candidates_[i].push_back(x);
        }
      }
    }

    // Relators grouped by the last generator they mention.
    relators_at_.resize(k);
    for (const Word& w : g.relators()) {
      int last = 0;
      for (int letter : w) last = std::max(last, std::abs(letter));
      if (last > 0) relators_at_[static_cast<std::size_t>(last - 1)].push_back(&w);
    }

    // Products of generator pairs, and their double classes when commuting.
    pair_product_.assign(k * k, kNoElem);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < a; ++b) pair_product_[b * k + a] = g.mul(gens_[b], gens_[a]);
  }

  std::uint64_t run(const std::function<bool(const Automorphism&)>& visit) {
    images_.assign(gens_.size(), kNoElem);
    visit_ = &visit;
    stop_ = false;
    descend(0);
    return nodes_;
  }

 private:
  bool pair_ok(std::size_t b, std::size_t a) const {
    const std::size_t k = gens_.size();
    const ElemId original = pair_product_[b * k + a];
    const ElemId image = g_.mul(images_[b], images_[a]);
    const auto oc = classes_.class_of[original];
    const auto ic = classes_.class_of[image];
    if (mode_ == Mode::all) {
      return order_[image] == order_[original] && classes_.sizes[ic] == classes_.sizes[oc];
    }
    if (ic != classes_.inverse_class[oc]) return false;
    if (mode_ == Mode::double_class_inverting && g_.commute(gens_[b], gens_[a])) {
      if (!g_.commute(images_[b], images_[a])) return false;
      const auto d = dclasses_->class_of(gens_[b], gens_[a]);
      if (dclasses_->class_of(images_[b], images_[a]) != dclasses_->inverse_dclass()[d]) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (stop_) return;
    if (depth == gens_.size()) {
      leaf();
      return;
    }
    for (ElemId cand : candidates_[depth]) {
      if (++nodes_ > options_.node_budget) throw SearchBudgetExceeded(options_.node_budget);
      images_[depth] = cand;
      bool ok = true;
      for (std::size_t b = 0; b < depth && ok; ++b) ok = pair_ok(b, depth);
      for (const Word* w : relators_at_[depth]) {
        if (!ok) break;
        ok = g_.evaluate(*w, images_) == g_.identity();
      }
      if (ok) descend(depth + 1);
      if (stop_) return;
    }
    images_[depth] = kNoElem;
  }

  void leaf() {
    auto phi = Automorphism::from_generator_images(g_, images_);
    if (!phi) return;
    if (mode_ == Mode::class_inverting && !is_class_inverting(g_, classes_, *phi)) return;
    if (mode_ == Mode::double_class_inverting && !is_double_class_inverting(g_, *dclasses_, *phi)) return;
    if (!(*visit_)(*phi)) stop_ = true;
  }

  const Group& g_;
  const ClassData& classes_;
  const DoubleClassData* dclasses_;
  Mode mode_;
  SearchOptions options_;
  std::vector<std::size_t> order_;
  std::vector<ElemId> gens_;
  std::vector<std::vector<ElemId>> candidates_;
  std::vector<std::vector<const Word*>> relators_at_;
  std::vector<ElemId> pair_product_;
  std::vector<ElemId> images_;
  const std::function<bool(const Automorphism&)>* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

SearchResult find_first(Searcher& searcher) {
  SearchResult result;
  try {
    result.nodes = searcher.run([&](const Automorphism& phi) {
      result.witness = phi;
      return false;
    });
  } catch (const SearchBudgetExceeded&) {
    result.status = SearchStatus::budget_exceeded;
    result.witness.reset();
    return result;
  }
  result.status = result.witness ? SearchStatus::found : SearchStatus::none;
  return result;
}

}  // namespace

std::uint64_t for_each_automorphism(const Group& g, const ClassData& classes, const SearchOptions& options,
                                    const std::function<bool(const Automorphism&)>& visit) {
  Searcher searcher(g, classes, nullptr, Mode::all, options);
  return searcher.run(visit);
}

std::vector<Automorphism> automorphism_group(const Group& g, const ClassData& classes, const SearchOptions& options) {
  std::vector<Automorphism> out;
  for_each_automorphism(g, classes, options, [&](const Automorphism& phi) {
    out.push_back(phi);
    return true;
  });
  return out;
}

SearchResult exists_class_inverting(const Group& g, const ClassData& classes, const SearchOptions& options) {
  Searcher searcher(g, classes, nullptr, Mode::class_inverting, options);
  return find_first(searcher);
}

SearchResult exists_double_class_inverting(const Group& g, const ClassData& classes,
                                           const DoubleClassData& dclasses, const SearchOptions& options) {
  Searcher searcher(g, classes, &dclasses, Mode::double_class_inverting, options);
  return find_first(searcher);
}

}  // namespace ginv
