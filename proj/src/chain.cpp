#include "pita/chain.hpp"

#include <algorithm>
#include <tuple>

namespace pita {

Chain Chain::from_bottom(const OperadicInstance& inst,
                         std::vector<Mor> maps_bottom_up) {
  if (maps_bottom_up.empty()) {
    throw ShapeError("from_bottom needs at least one map; use Chain(T0)");
  }
  Chain c;
  c.objs_.reserve(maps_bottom_up.size() + 1);
  c.objs_.push_back(inst.cod(maps_bottom_up.front()));
  for (const Mor& m : maps_bottom_up) {
    if (inst.cod(m) != c.objs_.back()) {
      throw ShapeError("chain maps do not compose at " + m.str());
    }
    if (!inst.has_morphism(m)) {
      throw ShapeError(m.str() + " is not a morphism of " + inst.name());
    }
    c.objs_.push_back(inst.dom(m));
  }
  c.maps_ = std::move(maps_bottom_up);
  return c;
}

Chain Chain::from_top(const OperadicInstance& inst,
                      const std::vector<Mor>& maps_top_down) {
  return from_bottom(inst, std::vector<Mor>(maps_top_down.rbegin(),
                                            maps_top_down.rend()));
}

bool Chain::operator<(const Chain& o) const {
  return std::tie(objs_, maps_) < std::tie(o.objs_, o.maps_);
}

std::string Chain::str() const {
  std::string s = "(";
  for (int k = length(); k >= 1; --k) {
    s += maps_[static_cast<std::size_t>(k - 1)].str();
    if (k > 1) s += ", ";
  }
  if (maps_.empty()) s += std::to_string(objs_.front());
  return s + ")";
}

Mor composite_to_base(const OperadicInstance& inst, const Chain& c, int k) {
  Mor acc = inst.identity(c.T(0));
  for (int j = 1; j <= k; ++j) acc = inst.compose(acc, c.f(j));
  return acc;
}

bool is_locally_op(const OperadicInstance& inst, const Chain& c) {
  Mor acc = inst.identity(c.T(0));
  for (int k = 1; k <= c.length(); ++k) {
    acc = inst.compose(acc, c.f(k));
    if (!is_op_morphism(inst, acc)) return false;
  }
  return true;
}

std::string Ladder::str() const {
  std::string s = source.str() + " => " + target.str() + " via [";
  for (std::size_t k = sigma.size(); k-- > 0;) {
    s += sigma[k].str();
    if (k) s += ", ";
  }
  return s + "]";
}

Ladder identity_ladder(const OperadicInstance& inst, const Chain& c) {
  Ladder l{c, c, {}};
  for (int k = 0; k <= c.length(); ++k) l.sigma.push_back(inst.identity(c.T(k)));
  return l;
}

Ladder compose_ladders(const OperadicInstance& inst, const Ladder& a,
                       const Ladder& b) {
  if (a.target != b.source) {
    throw ShapeError("ladders do not compose: " + a.target.str() + " vs " +
                     b.source.str());
  }
  Ladder l{a.source, b.target, {}};
  for (std::size_t k = 0; k < a.sigma.size(); ++k) {
    l.sigma.push_back(inst.compose(b.sigma[k], a.sigma[k]));
  }
  return l;
}

bool is_fop_diagram(const OperadicInstance& inst, const Ladder& l,
                    std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = l.source.length();
  if (l.target.length() != n ||
      l.sigma.size() != static_cast<std::size_t>(n + 1)) {
    return fail("length mismatch");
  }
  for (int k = 0; k <= n; ++k) {
    const Mor& s = l.sigma[static_cast<std::size_t>(k)];
    if (inst.dom(s) != l.source.T(k) || inst.cod(s) != l.target.T(k)) {
      return fail("rung " + std::to_string(k) + " has wrong endpoints");
    }
    if (!inst.has_morphism(s) || !is_quasibijection(inst, s)) {
      return fail("rung " + std::to_string(k) + " is not a quasibijection");
    }
  }
  for (int k = 1; k <= n; ++k) {
    const Mor lhs = inst.compose(l.target.f(k), l.sigma[static_cast<std::size_t>(k)]);
    const Mor rhs =
        inst.compose(l.sigma[static_cast<std::size_t>(k - 1)], l.source.f(k));
    if (lhs != rhs) return fail("square " + std::to_string(k) + " does not commute");
  }
  for (int k = 1; k <= n; ++k) {
    if (!is_fop_square(inst, l.sigma[static_cast<std::size_t>(k)], l.bottom(),
                       composite_to_base(inst, l.source, k),
                       composite_to_base(inst, l.target, k))) {
      return fail("rung " + std::to_string(k) + " is not fop over the base");
    }
  }
  return true;
}

}  // namespace pita
