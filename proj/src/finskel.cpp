#include "pita/finskel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pita {

FinMap::FinMap(int cod, std::initializer_list<int> values)
    : cod_(cod), v_(values.begin(), values.end()) {
  validate();
}

FinMap::FinMap(int cod, const std::vector<int>& values)
    : cod_(cod), v_(values.begin(), values.end()) {
  validate();
}

FinMap::FinMap(int cod, Store values) : cod_(cod), v_(std::move(values)) {
  validate();
}

void FinMap::validate() const {
  if (cod_ < 0) throw InvalidMap("negative codomain");
  for (int v : v_) {
    if (v < 1 || v > cod_) {
      throw InvalidMap("value " + std::to_string(v) + " outside {1.." +
                       std::to_string(cod_) + "}");
    }
  }
}

FinMap FinMap::identity(int n) {
  Store s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  FinMap f;
  f.cod_ = n;
  f.v_ = std::move(s);
  return f;
}

FinMap FinMap::terminal(int n) {
  FinMap f;
  f.cod_ = 1;
  f.v_.assign(static_cast<std::size_t>(n), 1);
  return f;
}

FinMap FinMap::empty(int cod) {
  FinMap f;
  f.cod_ = cod;
  return f;
}

bool FinMap::operator<(const FinMap& o) const {
  if (dom() != o.dom()) return dom() < o.dom();
  if (cod_ != o.cod_) return cod_ < o.cod_;
  return std::lexicographical_compare(v_.begin(), v_.end(), o.v_.begin(),
                                      o.v_.end());
}

std::string FinMap::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < v_.size(); ++j) {
    if (j) os << ',';
    os << v_[j];
  }
  os << "]:" << dom() << "->" << cod_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinMap& f) {
  return os << f.str();
}

FinMap operator*(const FinMap& f, const FinMap& g) {
  if (g.cod() != f.dom()) {
    throw CompositionError("cannot compose " + f.str() + " after " + g.str());
  }
  FinMap out;
  out.cod_ = f.cod_;
  out.v_.resize(g.v_.size());
  for (std::size_t j = 0; j < g.v_.size(); ++j) {
    out.v_[j] = f.v_[static_cast<std::size_t>(g.v_[j] - 1)];
  }
  return out;
}

bool is_order_preserving(const FinMap& f) {
  return std::is_sorted(f.values().begin(), f.values().end());
}

bool is_injective(const FinMap& f) {
  std::vector<char> seen(static_cast<std::size_t>(f.cod()) + 1, 0);
  for (int v : f.values()) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool is_surjective(const FinMap& f) {
  std::vector<char> seen(static_cast<std::size_t>(f.cod()) + 1, 0);
  int hit = 0;
  for (int v : f.values()) {
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      ++hit;
    }
  }
  return hit == f.cod();
}

bool is_bijection(const FinMap& f) {
  return f.dom() == f.cod() && is_injective(f);
}

FinMap inverse(const FinMap& f) {
  if (!is_bijection(f)) throw InvalidMap("not a bijection: " + f.str());
  FinMap::Store s(f.values().size());
  for (int j = 1; j <= f.dom(); ++j) s[static_cast<std::size_t>(f(j) - 1)] = j;
  return FinMap::trusted(f.dom(), std::move(s));
}

Fibre fibre(const FinMap& f, int i) {
  if (i < 1 || i > f.cod()) {
    throw IndexError("fibre index " + std::to_string(i) + " outside {1.." +
                     std::to_string(f.cod()) + "}");
  }
  Fibre out;
  for (int j = 1; j <= f.dom(); ++j) {
    if (f(j) == i) out.epsilon.push_back(j);
  }
  out.size = static_cast<int>(out.epsilon.size());
  return out;
}

std::vector<int> fibre_sizes(const FinMap& f) {
  std::vector<int> sizes(static_cast<std::size_t>(f.cod()), 0);
  for (int v : f.values()) ++sizes[static_cast<std::size_t>(v - 1)];
  return sizes;
}

FinMap fibre_map(const FinMap& g, const FinMap& f, int i) {
  if (g.cod() != f.dom()) {
    throw CompositionError("fibre map needs cod(g) = dom(f): " + g.str() +
                           ", " + f.str());
  }
  if (i < 1 || i > f.cod()) {
    throw IndexError("fibre index " + std::to_string(i) + " outside {1.." +
                     std::to_string(f.cod()) + "}");
  }
  // rank[k] is the 1-based position of k inside f^{-1}(i), or 0.
  FinMap::Store rank(f.v_.size() + 1, 0);
  int size = 0;
  for (std::size_t k = 0; k < f.v_.size(); ++k) {
    if (f.v_[k] == i) rank[k + 1] = ++size;
  }
  FinMap out;
  out.cod_ = size;
  for (int v : g.v_) {
    if (const int r = rank[static_cast<std::size_t>(v)]) out.v_.push_back(r);
  }
  return out;
}

PitaPair pita(const FinMap& f) {
  // next[i] = points placed so far in fibres 1..i, starting from the offset
  // of fibre i+1.
  FinMap::Store next(static_cast<std::size_t>(f.cod_) + 1, 0);
  for (int v : f.v_) ++next[static_cast<std::size_t>(v)];
  FinMap::Store eta;
  for (int i = 1; i <= f.cod_; ++i) {
    eta.insert(eta.end(), static_cast<std::size_t>(next[static_cast<std::size_t>(i)]), i);
    next[static_cast<std::size_t>(i)] += next[static_cast<std::size_t>(i - 1)];
  }
  FinMap::Store pi(f.v_.size());
  for (std::size_t j = 0; j < pi.size(); ++j) {
    pi[j] = ++next[static_cast<std::size_t>(f.v_[j] - 1)];
  }
  return {FinMap::trusted(f.dom(), std::move(pi)),
          FinMap::trusted(f.cod_, std::move(eta))};
}

FinMap ordinal_sum(const FinMap& f, const FinMap& g) {
  FinMap::Store s(f.values().begin(), f.values().end());
  for (int v : g.values()) s.push_back(v + f.cod());
  return FinMap(f.cod() + g.cod(), std::move(s));
}

void for_each_map(int m, int n, const std::function<void(const FinMap&)>& fn) {
  if (m < 0 || n < 0) throw InvalidMap("negative size");
  if (m == 0) {
    fn(FinMap::empty(n));
    return;
  }
  if (n == 0) return;
  FinMap::Store s(static_cast<std::size_t>(m), 1);
  while (true) {
    fn(FinMap(n, s));
    int k = m - 1;
    while (k >= 0 && s[static_cast<std::size_t>(k)] == n) {
      s[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) return;
    ++s[static_cast<std::size_t>(k)];
  }
}

std::vector<FinMap> enumerate_maps(int m, int n) {
  std::vector<FinMap> out;
  for_each_map(m, n, [&](const FinMap& f) { out.push_back(f); });
  return out;
}

std::vector<FinMap> enumerate_surjections(int m, int n) {
  std::vector<FinMap> out;
  if (n > m) return out;
  for_each_map(m, n, [&](const FinMap& f) {
    if (is_surjective(f)) out.push_back(f);
  });
  return out;
}

std::vector<FinMap> enumerate_bijections(int n) {
  std::vector<FinMap> out;
  FinMap::Store s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do {
    out.emplace_back(n, s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::vector<FinMap> enumerate_order_preserving(int m, int n) {
  std::vector<FinMap> out;
  if (m == 0) {
    out.push_back(FinMap::empty(n));
    return out;
  }
  if (n == 0) return out;
  FinMap::Store s(static_cast<std::size_t>(m), 1);
  while (true) {
    out.emplace_back(n, s);
    int k = m - 1;
    while (k >= 0 && s[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) return out;
    const int v = ++s[static_cast<std::size_t>(k)];
    for (int r = k + 1; r < m; ++r) s[static_cast<std::size_t>(r)] = v;
  }
}

}  // namespace pita

std::size_t std::hash<pita::FinMap>::operator()(
    const pita::FinMap& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.cod()) * 0x9e3779b97f4a7c15ULL;
  for (int v : f.values()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}
