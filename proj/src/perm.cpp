#include "ginv/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace ginv {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) images_.push_back(0);
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  if (degree == 0) degree = 1;
  if (degree > std::numeric_limits<Point>::max())
    throw std::invalid_argument("Perm: degree too large");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<std::size_t>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> used(p.degree(), false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= p.degree())
        throw std::invalid_argument("Perm: cycle point out of range");
      if (used[c[k]]) throw std::invalid_argument("Perm: cycles are not disjoint");
      used[c[k]] = true;
      p.images_[c[k]] = static_cast<Point>(c[(k + 1) % c.size()]);
    }
  }
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("Perm: degree mismatch in product");
  Perm out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Perm acc = identity(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, len);
  return result;
}

bool Perm::is_even() const {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    os << '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) os << ' ';
      os << y + 1;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm Perm::extended(std::size_t new_degree) const {
  if (new_degree < degree()) throw std::invalid_argument("Perm: cannot shrink degree");
  Perm out = identity(new_degree);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

Perm parse_cycles(std::string_view text, std::size_t min_degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw ParseError("unterminated cycle: \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                         "' in cycle notation");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > std::numeric_limits<Point>::max()) throw ParseError("point out of range");
        ++i;
      }
      if (value == 0) throw ParseError("points are 1-based; 0 is not allowed");
      cycle.push_back(value - 1);
      max_point = std::max(max_point, value);
    }
    std::vector<std::size_t> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated point inside a cycle");
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  // Cycles written in sequence are multiplied right to left.
  std::size_t degree = std::max<std::size_t>({min_degree, max_point, 1});
  Perm result = Perm::identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    result = Perm::from_cycles(degree, {*it}) * result;
  }
  return result;
}

}  // namespace ginv

std::size_t std::hash<ginv::Perm>::operator()(const ginv::Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (ginv::Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
