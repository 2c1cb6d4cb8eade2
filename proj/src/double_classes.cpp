#include "ginv/double_classes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ginv {

std::size_t DoubleClassData::pair_index(ElemId f, ElemId g) const {
  auto row = centralizer_of(f);
  auto it = std::lower_bound(row.begin(), row.end(), g);
  if (it == row.end() || *it != g) throw std::invalid_argument("pair_index: elements do not commute");
  return offset_[f] + static_cast<std::size_t>(it - row.begin());
}

ElemPair DoubleClassData::pair(std::size_t index) const {
  auto it = std::upper_bound(offset_.begin(), offset_.end(), index);
  auto f = static_cast<ElemId>(it - offset_.begin() - 1);
  return {f, pair_g_[index]};
}

DoubleClassData double_classes(const Group& g, const ClassData& classes, const DoubleClassOptions& options) {
  const std::size_t n = g.order();
  std::size_t total = 0;
  std::vector<std::vector<ElemId>> rep_centralizers(classes.count());
  for (std::size_t c = 0; c < classes.count(); ++c) {
    rep_centralizers[c] = centralizer_elements(g, classes.reps[c]);
    total += classes.sizes[c] * rep_centralizers[c].size();
  }
  if (total > options.max_pairs)
    throw SizeLimitError("double classes: number of commuting pairs exceeds the cap", options.max_pairs);

  DoubleClassData d;
  d.offset_.assign(n + 1, 0);
  d.pair_g_.reserve(total);
  std::vector<ElemId> row;
  for (ElemId f = 0; f < n; ++f) {
    // C(f) = x C(a) x^-1 where x conjugates the class representative a onto f.
    const auto& base = rep_centralizers[classes.class_of[f]];
    const ElemId x = classes.transversal[f];
    row.clear();
    for (ElemId h : base) row.push_back(g.conj(x, h));
    std::sort(row.begin(), row.end());
    d.pair_g_.insert(d.pair_g_.end(), row.begin(), row.end());
    d.offset_[f + 1] = d.pair_g_.size();
  }

  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  d.class_of_pair_.assign(total, kUnset);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < total; ++start) {
    if (d.class_of_pair_[start] != kUnset) continue;
    auto cls = static_cast<std::uint32_t>(d.reps_.size());
    d.reps_.push_back(d.pair(start));
    d.class_of_pair_[start] = cls;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [f, h] = d.pair(queue[head]);
      for (std::size_t i = 0; i < g.num_generators(); ++i) {
        ElemId s = g.generator_id(i);
        std::size_t idx = d.pair_index(g.conj(s, f), g.conj(s, h));
        if (d.class_of_pair_[idx] == kUnset) {
          d.class_of_pair_[idx] = cls;
          queue.push_back(idx);
        }
      }
    }
    d.sizes_.push_back(queue.size());
  }
  d.inverse_.resize(d.reps_.size());
  for (std::size_t c = 0; c < d.reps_.size(); ++c) {
    auto [f, h] = d.reps_[c];
    d.inverse_[c] = d.class_of(g.inv(f), g.inv(h));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Factorized partitions

bool block_precedes(const FactorBlock& a, const FactorBlock& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

int FactorizedPartition::total() const {
  int t = 0;
  for (const auto& b : blocks) t += b.size();
  return t;
}

void FactorizedPartition::canonicalize() { std::sort(blocks.begin(), blocks.end(), block_precedes); }

std::string FactorizedPartition::to_string() const {
  std::ostringstream os;
  bool has_units = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    os << (i ? " + " : "") << b.n_sigma << '.' << b.n_mid << '.' << b.n_pi;
    has_units = has_units || b.n_mid > 1;
  }
  if (has_units) {
    os << "  a=(";
    bool first = true;
    for (const auto& b : blocks) {
      if (b.n_mid == 1) continue;
      os << (first ? "" : ",") << b.unit;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

FactorizedPartition sn_double_class_invariant(std::size_t n, const Perm& sigma, const Perm& pi) {
  if (sigma.degree() != n || pi.degree() != n)
    throw std::invalid_argument("sn_double_class_invariant: degree mismatch");
  if (!(sigma * pi == pi * sigma))
    throw std::invalid_argument("sn_double_class_invariant: permutations do not commute");

  FactorizedPartition result;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // Orbit of <sigma, pi> through start.
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t y : {static_cast<std::size_t>(sigma[orbit[head]]), static_cast<std::size_t>(pi[orbit[head]])}) {
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    // The abelian group <sigma, pi> acts regularly on the orbit, so an element
    // restricted to the orbit is determined by where it sends `start`.
    std::vector<std::size_t> sigma_pow{start};
    for (std::size_t y = sigma[start]; y != start; y = sigma[y]) sigma_pow.push_back(y);
    std::vector<std::size_t> pi_pow{start};
    for (std::size_t y = pi[start]; y != start; y = pi[y]) pi_pow.push_back(y);
    const int m_sigma = static_cast<int>(sigma_pow.size());
    const int m_pi = static_cast<int>(pi_pow.size());

    int n_mid = 0;
    for (std::size_t y : sigma_pow)
      if (std::find(pi_pow.begin(), pi_pow.end(), y) != pi_pow.end()) ++n_mid;

    FactorBlock block;
    block.n_mid = n_mid;
    block.n_sigma = m_sigma / n_mid;
    block.n_pi = m_pi / n_mid;
    block.unit = 1;
    if (n_mid > 1) {
      const std::size_t target = pi_pow[static_cast<std::size_t>(block.n_pi)];
      block.unit = 0;
      for (int a = 1; a < n_mid; ++a) {
        if (std::gcd(a, n_mid) != 1) continue;
        if (sigma_pow[static_cast<std::size_t>(block.n_sigma * a) % sigma_pow.size()] == target) {
          block.unit = a;
          break;
        }
      }
      if (block.unit == 0) throw std::logic_error("sn_double_class_invariant: no unit found");
    }
    if (block.size() != static_cast<int>(orbit.size()))
      throw std::logic_error("sn_double_class_invariant: block size does not match orbit size");
    result.blocks.push_back(block);
  }
  result.canonicalize();
  return result;
}

namespace {

void enumerate_multisets(const std::vector<FactorBlock>& types, std::size_t first, int remaining,
                         std::vector<FactorBlock>& current, std::vector<FactorizedPartition>& out) {
  if (remaining == 0) {
    out.push_back(FactorizedPartition{current});
    return;
  }
  for (std::size_t t = first; t < types.size(); ++t) {
    if (types[t].size() > remaining) continue;
    current.push_back(types[t]);
    enumerate_multisets(types, t, remaining - types[t].size(), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FactorizedPartition> sn_enumerate_factorized_partitions(int n) {
  if (n < 1) throw std::invalid_argument("sn_enumerate_factorized_partitions: n must be positive");
  std::vector<FactorBlock> types;
  for (int s = 1; s <= n; ++s)
    for (int m = 1; s * m <= n; ++m)
      for (int p = 1; s * m * p <= n; ++p)
        for (int a = 1; a <= m; ++a) {
          if (m > 1 && (a == m || std::gcd(a, m) != 1)) continue;
          types.push_back({s, m, p, a});
        }
  std::sort(types.begin(), types.end(), block_precedes);
  std::vector<FactorizedPartition> out;
  std::vector<FactorBlock> current;
  enumerate_multisets(types, 0, n, current, out);
  // Finest first: all-ones partition leading, the single n-block last.
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace ginv
