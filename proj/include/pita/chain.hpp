// Chains T_n -> ... -> T_0 and ladders of horizontal maps between them.
#pragma once

#include <string>
#include <vector>

#include "pita/opcat.hpp"

namespace pita {

// f_k : T_k -> T_{k-1} for 1 <= k <= n. Storage is bottom-up.
class Chain {
 public:
  Chain() = default;
  // A 0-chain on one object.
  explicit Chain(Obj t0) : objs_{t0} {}
  // Maps listed top-down, f_n first, as in the JSON encoding.
  static Chain from_top(const OperadicInstance& inst,
                        const std::vector<Mor>& maps_top_down);
  // Maps listed bottom-up, f_1 first. Requires at least one map.
  static Chain from_bottom(const OperadicInstance& inst,
                           std::vector<Mor> maps_bottom_up);

  int length() const { return static_cast<int>(maps_.size()); }
  Obj T(int k) const { return objs_[static_cast<std::size_t>(k)]; }
  const Mor& f(int k) const { return maps_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<Obj>& objects_bottom_up() const { return objs_; }
  const std::vector<Mor>& maps_bottom_up() const { return maps_; }

  bool operator==(const Chain& o) const = default;
  bool operator<(const Chain& o) const;
  std::string str() const;

 private:
  std::vector<Obj> objs_;
  std::vector<Mor> maps_;
};

// f_1 f_2 ... f_k : T_k -> T_0 (identity for k = 0).
Mor composite_to_base(const OperadicInstance& inst, const Chain& c, int k);

bool is_locally_op(const OperadicInstance& inst, const Chain& c);

// Horizontal maps sigma_k : source.T(k) -> target.T(k), 0 <= k <= n.
struct Ladder {
  Chain source;
  Chain target;
  std::vector<Mor> sigma;

  const Mor& bottom() const { return sigma.front(); }
  bool operator==(const Ladder& o) const = default;
  std::string str() const;
};

Ladder identity_ladder(const OperadicInstance& inst, const Chain& c);
// Horizontal composite: first a, then b. Requires a.target == b.source.
Ladder compose_ladders(const OperadicInstance& inst, const Ladder& a,
                       const Ladder& b);

// Every rung a quasibijection, every square commuting, and every sigma_k
// fibrewise order-preserving with respect to sigma_0 along the composites to
// T_0. When why is given, it receives the first failing condition.
bool is_fop_diagram(const OperadicInstance& inst, const Ladder& l,
                    std::string* why = nullptr);

}  // namespace pita
