#include "ginv/cyclo.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ginv/modular.hpp"

namespace ginv {
namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of a by the monic polynomial b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("cyclotomic: bad division");
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t, std::uint64_t>(a, b));
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  static std::mutex mutex;
  static std::map<std::uint32_t, Poly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  std::function<const Poly&(std::uint32_t)> get = [&](std::uint32_t n) -> const Poly& {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // x^n - 1 = prod_{d | n} Phi_d(x)
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d)
      if (n % d == 0) p = divide_exact(p, get(d));
    return cache.emplace(n, std::move(p)).first->second;
  };
  return get(m);
}

Cyclo::Cyclo(std::uint32_t order) : order_(order), coeffs_(order, 0) {
  if (order == 0) throw std::invalid_argument("Cyclo: order must be positive");
}

Cyclo Cyclo::integer(std::uint32_t order, std::int64_t value) {
  Cyclo c(order);
  c.coeffs_[0] = value;
  return c;
}

Cyclo Cyclo::root(std::uint32_t order, std::uint64_t power) {
  Cyclo c(order);
  c.coeffs_[power % order] = 1;
  return c;
}

void Cyclo::add_term(std::uint64_t power, std::int64_t coeff) { coeffs_[power % order_] += coeff; }

Cyclo Cyclo::lifted(std::uint32_t new_order) const {
  if (new_order % order_ != 0) throw std::invalid_argument("Cyclo: lift order must be a multiple");
  if (new_order == order_) return *this;
  Cyclo c(new_order);
  const std::uint32_t step = new_order / order_;
  for (std::uint32_t j = 0; j < order_; ++j) c.coeffs_[j * step] = coeffs_[j];
  return c;
}

Cyclo Cyclo::conj() const {
  Cyclo c(order_);
  for (std::uint32_t j = 0; j < order_; ++j) c.coeffs_[(order_ - j) % order_] = coeffs_[j];
  return c;
}

Cyclo Cyclo::operator-() const {
  Cyclo c = *this;
  for (auto& v : c.coeffs_) v = -v;
  return c;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  if (rhs.order_ != order_) {
    std::uint32_t m = lcm_order(order_, rhs.order_);
    *this = lifted(m);
    Cyclo r = rhs.lifted(m);
    for (std::uint32_t j = 0; j < m; ++j) coeffs_[j] += r.coeffs_[j];
    return *this;
  }
  for (std::uint32_t j = 0; j < order_; ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) { return *this += -rhs; }

Cyclo& Cyclo::operator*=(std::int64_t k) {
  for (auto& v : coeffs_) v *= k;
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.order_ != b.order_) {
    std::uint32_t m = lcm_order(a.order_, b.order_);
    return a.lifted(m) * b.lifted(m);
  }
  const std::uint32_t m = a.order_;
  Cyclo c(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::uint32_t k = i + j;
      if (k >= m) k -= m;
      c.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return c;
}

std::vector<std::int64_t> Cyclo::normal_form() const {
  const Poly& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  Poly r = coeffs_;
  for (std::size_t i = r.size(); i-- > deg;) {
    std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool Cyclo::is_zero() const {
  bool all_zero = true;
  for (auto v : coeffs_) all_zero = all_zero && v == 0;
  if (all_zero) return true;
  for (auto v : normal_form())
    if (v != 0) return false;
  return true;
}

std::optional<std::int64_t> Cyclo::as_integer() const {
  auto nf = normal_form();
  for (std::size_t i = 1; i < nf.size(); ++i)
    if (nf[i] != 0) return std::nullopt;
  return nf.empty() ? 0 : nf[0];
}

bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }

std::uint64_t Cyclo::reduce_mod(std::uint64_t p, std::uint64_t z) const {
  std::uint64_t acc = 0;
  std::uint64_t zp = 1;
  for (std::uint32_t j = 0; j < order_; ++j) {
    if (coeffs_[j] != 0) {
      std::int64_t c = coeffs_[j] % static_cast<std::int64_t>(p);
      if (c < 0) c += static_cast<std::int64_t>(p);
      acc = (acc + mulmod(static_cast<std::uint64_t>(c), zp, p)) % p;
    }
    zp = mulmod(zp, z, p);
  }
  return acc;
}

std::string Cyclo::to_string() const {
  if (auto k = as_integer()) return std::to_string(*k);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t j = 0; j < order_; ++j) {
    std::int64_t c = coeffs_[j];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (j == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << 'z' << order_;
      if (j != 1) os << '^' << j;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ginv
