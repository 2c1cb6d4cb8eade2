#include "ginv/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ginv/catalog.hpp"
#include "ginv/modular.hpp"

namespace ginv {
namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major

struct Field {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t inv(std::uint64_t a) const { return invmod(a, p); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const Field& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    std::uint64_t s = f.inv(m[row][c]);
    for (auto& v : m[row]) v = f.mul(v, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      std::uint64_t t = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(t, m[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {x : a x = 0}.
Mat nullspace(Mat a, const Field& f) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial det(x I - a), lowest degree first. Reduces to
// upper Hessenberg form by elementary similarities, which (unlike trace-based
// recurrences) needs no division by integers and so works for any p.
Vec charpoly(Mat h, const Field& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && h[pivot][j] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (auto& row : h) std::swap(row[pivot], row[j + 1]);
    }
    const std::uint64_t inv_pivot = f.inv(h[j + 1][j]);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const std::uint64_t t = f.mul(h[i][j], inv_pivot);
      for (std::size_t k = 0; k < n; ++k) h[i][k] = f.sub(h[i][k], f.mul(t, h[j + 1][k]));
      for (std::size_t k = 0; k < n; ++k) h[k][j + 1] = f.add(h[k][j + 1], f.mul(t, h[k][i]));
    }
  }
  // p[k] = charpoly of the leading k x k block.
  std::vector<Vec> p(n + 1);
  p[0] = Vec{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p[k - 1][d]);
      next[d] = f.sub(next[d], f.mul(h[k - 1][k - 1], p[k - 1][d]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h[k - i][k - i - 1]);
      if (prod == 0) break;
      const std::uint64_t coef = f.mul(h[k - i - 1][k - 1], prod);
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d)
        next[d] = f.sub(next[d], f.mul(coef, p[k - i - 1][d]));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::uint64_t eval_poly(const Vec& c, std::uint64_t x, const Field& f) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
  return acc;
}

// Splits the subspace spanned by `basis` (rows, in RREF) into eigenspaces of
// the column action v -> m v.
std::vector<Mat> split(const Mat& basis, const std::vector<std::size_t>& pivots, const Mat& m,
                       const Field& f) {
  const std::size_t d = basis.size();
  const std::size_t r = m.size();
  // Restricted matrix: column t holds the coordinates of m * basis[t].
  Mat restricted(d, Vec(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    Vec image(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc = f.add(acc, f.mul(m[i][j], basis[t][j]));
      image[i] = acc;
    }
    for (std::size_t s = 0; s < d; ++s) restricted[s][t] = image[pivots[s]];
  }
  Vec poly = charpoly(restricted, f);
  std::vector<Mat> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda = 0; lambda < f.p && total < d; ++lambda) {
    if (eval_poly(poly, lambda, f) != 0) continue;
    Mat shifted = restricted;
    for (std::size_t s = 0; s < d; ++s) shifted[s][s] = f.sub(shifted[s][s], lambda);
    Mat coords = nullspace(shifted, f);
    if (coords.empty()) continue;
    Mat space;
    for (const Vec& c : coords) {
      Vec v(r, 0);
      for (std::size_t t = 0; t < d; ++t) {
        if (c[t] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) v[j] = f.add(v[j], f.mul(c[t], basis[t][j]));
      }
      space.push_back(std::move(v));
    }
    total += space.size();
    parts.push_back(std::move(space));
  }
  if (total != d) throw std::logic_error("character_table: class matrices are not diagonalisable mod p");
  return parts;
}

bool lex_greater(const std::vector<std::vector<std::int64_t>>& a,
                 const std::vector<std::vector<std::int64_t>>& b) {
  return a > b;
}

}  // namespace

ClassMultCoefficients class_mult_coefficients(const Group& g, const ClassData& classes) {
  const std::size_t r = classes.count();
  ClassMultCoefficients a(r);
  for (std::size_t k = 0; k < r; ++k) {
    const ElemId z = classes.reps[k];
    for (ElemId x = 0; x < g.order(); ++x) {
      ElemId y = g.mul(g.inv(x), z);
      ++a.at(classes.class_of[x], classes.class_of[y], k);
    }
  }
  return a;
}

std::uint64_t dixon_prime(std::size_t order, std::size_t exponent, std::uint64_t bound) {
  const double lower = std::max(2.0 * std::sqrt(static_cast<double>(order)), static_cast<double>(exponent));
  for (std::uint64_t p = exponent + 1; p < bound; p += exponent) {
    if (static_cast<double>(p) <= lower) continue;
    if (order % p == 0) continue;
    if (is_prime(p)) return p;
  }
  throw std::runtime_error("no prime = 1 mod " + std::to_string(exponent) + " found below " +
                           std::to_string(bound));
}

CharacterTable character_table(const Group& g, const ClassData& classes, const CharTableOptions& options) {
  if (g.order() > options.max_order)
    throw SizeLimitError("character table: group order exceeds the cap", options.max_order);
  const std::size_t r = classes.count();
  const std::size_t n = g.order();

  std::vector<std::size_t> elem_order(r);
  std::size_t exponent = 1;
  for (std::size_t k = 0; k < r; ++k) {
    elem_order[k] = element_order(g, classes.reps[k]);
    exponent = std::lcm(exponent, elem_order[k]);
  }

  CharacterTable table;
  table.exponent = static_cast<std::uint32_t>(exponent);
  const std::uint64_t p = dixon_prime(n, exponent, options.prime_bound);
  table.prime = p;
  const Field f{p};

  // Common eigenvectors of the class matrices (M_i)[j][k] = a(i, j, k).
  auto coeff = class_mult_coefficients(g, classes);
  std::vector<Mat> spaces;
  {
    Mat full(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool done = std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; });
    if (done) break;
    Mat m(r, Vec(r, 0));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m[j][k] = coeff.at(i, j, k) % p;
    std::vector<Mat> next;
    for (Mat& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      auto pivots = rref(s, f);
      for (Mat& part : split(s, pivots, m, f)) {
        rref(part, f);
        next.push_back(std::move(part));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw std::logic_error("character_table: class matrices did not separate the irreducibles");

  // Power maps: class of rep^l for l < element order.
  std::vector<std::vector<std::uint32_t>> power_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    ElemId x = g.identity();
    for (std::size_t l = 0; l < elem_order[k]; ++l) {
      power_class[k].push_back(classes.class_of[x]);
      x = g.mul(x, classes.reps[k]);
    }
  }

  const std::uint64_t z = powmod(primitive_root(p), (p - 1) / exponent, p);

  struct Row {
    std::size_t degree;
    std::vector<Cyclo> values;
    std::vector<std::vector<std::int64_t>> key;
    bool trivial;
  };
  std::vector<Row> rows;
  for (const Mat& s : spaces) {
    Vec omega = s[0];
    if (omega[0] == 0) throw std::logic_error("character_table: eigenvector vanishes at the identity");
    std::uint64_t scale = f.inv(omega[0]);
    for (auto& v : omega) v = f.mul(v, scale);

    // sum_k omega_k omega_{k*} / |C_k| = |G| / d^2
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = f.add(sum, f.mul(f.mul(omega[k], omega[classes.inverse_class[k]]), f.inv(classes.sizes[k] % p)));
    std::uint64_t d2 = f.mul(n % p, f.inv(sum));
    std::size_t degree = 0;
    for (std::size_t d = 1; d * d <= n; ++d)
      if ((d * d) % p == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw std::logic_error("character_table: no integral degree found");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = f.mul(f.mul(degree % p, omega[k]), f.inv(classes.sizes[k] % p));

    Row row;
    row.degree = degree;
    row.trivial = true;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t o = elem_order[k];
      const std::uint64_t step = exponent / o;
      const std::uint64_t zo = powmod(z, step, p);
      const std::uint64_t inv_o = f.inv(o % p);
      Cyclo value(table.exponent);
      for (std::size_t s = 0; s < o; ++s) {
        // multiplicity of eigenvalue zeta_o^s
        std::uint64_t acc = 0;
        const std::uint64_t w = powmod(zo, (o - s) % o, p);
        std::uint64_t wl = 1;
        for (std::size_t l = 0; l < o; ++l) {
          acc = f.add(acc, f.mul(chi[power_class[k][l]], wl));
          wl = f.mul(wl, w);
        }
        std::uint64_t mult = f.mul(acc, inv_o);
        if (mult > degree) throw std::logic_error("character_table: eigenvalue multiplicity out of range");
        if (mult) value.add_term(s * step, static_cast<std::int64_t>(mult));
      }
      row.values.push_back(std::move(value));
      if (chi[k] != 1) row.trivial = false;
    }
    row.trivial = row.trivial && degree == 1;
    for (const Cyclo& v : row.values) row.key.push_back(v.normal_form());
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.trivial != b.trivial) return a.trivial;
    return lex_greater(a.key, b.key);
  });
  for (Row& row : rows) {
    table.degrees.push_back(row.degree);
    table.chars.push_back(std::move(row.values));
  }
  return table;
}

bool all_characters_real(const CharacterTable& table) {
  for (const auto& row : table.chars)
    for (const Cyclo& v : row)
      if (!(v.conj() == v)) return false;
  return true;
}

}  // namespace ginv
