// Skeletal category of finite ordinals {1,...,n} and arbitrary maps.
#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pita {

class CompositionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidMap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A map {1..dom} -> {1..cod}. Values are 1-based; value(j) is defined for
// 1 <= j <= dom. Invariant: every value lies in [1, cod]; dom > 0 implies
// cod > 0.
class FinMap {
 public:
  using Store = boost::container::small_vector<int, 12>;

  FinMap() = default;
  FinMap(int cod, std::initializer_list<int> values);
  FinMap(int cod, const std::vector<int>& values);
  FinMap(int cod, Store values);

  static FinMap identity(int n);
  // The unique map n -> 1.
  static FinMap terminal(int n);
  static FinMap empty(int cod = 0);

  int dom() const { return static_cast<int>(v_.size()); }
  int cod() const { return cod_; }
  int operator()(int j) const { return v_[static_cast<std::size_t>(j - 1)]; }
  const Store& values() const { return v_; }
  std::vector<int> to_vector() const { return {v_.begin(), v_.end()}; }

  bool operator==(const FinMap& o) const {
    return cod_ == o.cod_ && v_ == o.v_;
  }
  bool operator!=(const FinMap& o) const { return !(*this == o); }
  bool operator<(const FinMap& o) const;

  std::string str() const;

 private:
  friend FinMap operator*(const FinMap& f, const FinMap& g);
  friend FinMap fibre_map(const FinMap& g, const FinMap& f, int i);
  friend struct PitaPair pita(const FinMap& f);
  friend FinMap inverse(const FinMap& f);

  // Skips validation; callers guarantee the invariant.
  static FinMap trusted(int cod, Store values) {
    FinMap f;
    f.cod_ = cod;
    f.v_ = std::move(values);
    return f;
  }

  void validate() const;

  int cod_ = 0;
  Store v_;
};

std::ostream& operator<<(std::ostream& os, const FinMap& f);

// Mathematical order: (f * g)(j) = f(g(j)). Requires cod(g) = dom(f).
FinMap operator*(const FinMap& f, const FinMap& g);

// Diagrammatic order: g first, then f. compose(g, f) = f * g.
inline FinMap compose(const FinMap& g, const FinMap& f) { return f * g; }

bool is_order_preserving(const FinMap& f);
bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);
bool is_bijection(const FinMap& f);
// Requires a bijection.
FinMap inverse(const FinMap& f);

struct Fibre {
  int size = 0;
  // Strictly increasing positions j with f(j) = i.
  std::vector<int> epsilon;

  bool operator==(const Fibre& o) const = default;
};

Fibre fibre(const FinMap& f, int i);
std::vector<int> fibre_sizes(const FinMap& f);

// g^f_i : (f*g)^{-1}(i) -> f^{-1}(i), characterised by
// eps_{f,i} * result = g * eps_{f*g,i}.
FinMap fibre_map(const FinMap& g, const FinMap& f, int i);

struct PitaPair {
  FinMap pi;
  FinMap eta;
  bool operator==(const PitaPair& o) const = default;
};

// f = eta * pi, pi a bijection that is increasing on every fibre of f,
// eta weakly increasing.
PitaPair pita(const FinMap& f);

// Block sum: f on the first dom(f) points, g shifted by cod(f) after them.
FinMap ordinal_sum(const FinMap& f, const FinMap& g);

// Exhaustive streams in lexicographic order of value tables.
void for_each_map(int m, int n, const std::function<void(const FinMap&)>& fn);
std::vector<FinMap> enumerate_maps(int m, int n);
std::vector<FinMap> enumerate_surjections(int m, int n);
std::vector<FinMap> enumerate_bijections(int n);
std::vector<FinMap> enumerate_order_preserving(int m, int n);

}  // namespace pita

template <>
struct std::hash<pita::FinMap> {
  std::size_t operator()(const pita::FinMap& f) const noexcept;
};
