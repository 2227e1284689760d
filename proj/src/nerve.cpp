#include "pita/nerve.hpp"

#include <map>
#include <unordered_map>

namespace pita {

namespace {

class HomCache {
 public:
  explicit HomCache(const OperadicInstance& inst) : inst_(inst) {}
  const std::vector<Mor>& operator()(Obj a, Obj b) {
    auto it = cache_.find({a, b});
    if (it == cache_.end()) {
      it = cache_.emplace(std::pair{a, b}, inst_.hom(a, b)).first;
    }
    return it->second;
  }

 private:
  const OperadicInstance& inst_;
  std::map<std::pair<Obj, Obj>, std::vector<Mor>> cache_;
};

void grow(const OperadicInstance& inst, HomCache& homs,
          const std::vector<Obj>& objs, int n, bool only_p, Obj top,
          const Mor& to_base, std::vector<Mor>& maps,
          std::vector<Chain>& out) {
  if (static_cast<int>(maps.size()) == n) {
    out.push_back(maps.empty() ? Chain(top) : Chain::from_bottom(inst, maps));
    return;
  }
  for (Obj next : objs) {
    for (const Mor& f : homs(next, top)) {
      const Mor acc = inst.compose(to_base, f);
      if (only_p && !is_op_morphism(inst, acc)) continue;
      maps.push_back(f);
      grow(inst, homs, objs, n, only_p, next, acc, maps, out);
      maps.pop_back();
    }
  }
}

std::vector<Chain> enumerate(const OperadicInstance& inst, int n, int bound,
                             bool only_p) {
  if (n < 0 || bound < 1) throw std::invalid_argument("need n >= 0, bound >= 1");
  HomCache homs(inst);
  const std::vector<Obj> objs = inst.objects(bound);
  std::vector<Chain> out;
  std::vector<Mor> maps;
  for (Obj t0 : objs) {
    grow(inst, homs, objs, n, only_p, t0, inst.identity(t0), maps, out);
  }
  return out;
}

Chain rebuild(const OperadicInstance& inst, Obj base, std::vector<Mor> maps) {
  return maps.empty() ? Chain(base) : Chain::from_bottom(inst, std::move(maps));
}

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw IndexError(std::string(what) + " index " + std::to_string(i) +
                     " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
}

}  // namespace

std::vector<Chain> enumerate_chains(const OperadicInstance& inst, int n,
                                    int bound) {
  return enumerate(inst, n, bound, false);
}

std::vector<Chain> enumerate_p(const OperadicInstance& inst, int n,
                               int bound) {
  return enumerate(inst, n, bound, true);
}

Chain w_face(const OperadicInstance& inst, int i, const Chain& c) {
  const int n = c.length();
  if (n < 1) throw IndexError("a 0-chain has no faces");
  check_index(i, 0, n, "face");
  std::vector<Mor> maps = c.maps_bottom_up();
  if (i == 0) {
    maps.pop_back();
    return rebuild(inst, c.T(0), std::move(maps));
  }
  if (i == n) {
    maps.erase(maps.begin());
    return rebuild(inst, c.T(1), std::move(maps));
  }
  const auto p = static_cast<std::size_t>(n - i);
  maps[p - 1] = inst.compose(maps[p - 1], maps[p]);
  maps.erase(maps.begin() + static_cast<std::ptrdiff_t>(p));
  return rebuild(inst, c.T(0), std::move(maps));
}

Chain w_degeneracy(const OperadicInstance& inst, int i, const Chain& c) {
  const int n = c.length();
  check_index(i, 0, n, "degeneracy");
  std::vector<Mor> maps = c.maps_bottom_up();
  const int p = n - i;
  maps.insert(maps.begin() + p, inst.identity(c.T(p)));
  return Chain::from_bottom(inst, std::move(maps));
}

Chain face(const OperadicInstance& inst, int i, const Chain& c) {
  check_index(i, 0, c.length() - 1, "face");
  return w_face(inst, i, c);
}

Chain top_face(const OperadicInstance& inst, const Chain& c) {
  if (c.length() < 1) throw IndexError("a 0-chain has no top face");
  return reflect_chain(inst, w_face(inst, c.length(), c)).chain;
}

Chain degeneracy(const OperadicInstance& inst, int i, const Chain& c) {
  return w_degeneracy(inst, i, c);
}

Chain d(const OperadicInstance& inst, int i, const Chain& c) {
  return i == c.length() ? top_face(inst, c) : face(inst, i, c);
}

Ladder lift(const OperadicInstance& inst, const Chain& c, const Mor& sigma0) {
  if (inst.dom(sigma0) != c.T(0)) {
    throw ShapeError("lift: sigma0 does not start at T_0 of " + c.str());
  }
  if (c.length() == 0) return Ladder{c, Chain(inst.cod(sigma0)), {sigma0}};
  std::vector<Mor> maps = c.maps_bottom_up();
  maps.front() = inst.compose(sigma0, maps.front());
  const Chain moved = Chain::from_bottom(inst, maps);
  Ladder shift{c, moved, {sigma0}};
  for (int k = 1; k <= c.length(); ++k) shift.sigma.push_back(inst.identity(c.T(k)));
  return compose_ladders(inst, shift, reflect_chain(inst, moved).unit);
}

std::vector<Ladder> search_lifts(const OperadicInstance& inst, const Chain& c,
                                 const Mor& sigma0, int bound) {
  std::vector<Ladder> out;
  const int n = c.length();
  HomCache homs(inst);
  const std::vector<Obj> objs = inst.objects(bound);
  // Build target maps g_k and rungs sigma_k bottom-up, pruning on commuting
  // squares and on local order preservation of the target.
  std::vector<Mor> rungs{sigma0};
  std::vector<Mor> gs;
  std::function<void(const Mor&)> step = [&](const Mor& to_base) {
    const int k = static_cast<int>(gs.size()) + 1;
    if (k > n) {
      Ladder l{c, rebuild(inst, inst.cod(sigma0), gs), rungs};
      if (is_fop_diagram(inst, l)) out.push_back(l);
      return;
    }
    const Obj below = k == 1 ? inst.cod(sigma0) : inst.dom(gs.back());
    const Mor want = inst.compose(rungs.back(), c.f(k));
    for (Obj s : objs) {
      if (inst.cardinality(s) != inst.cardinality(c.T(k))) continue;
      for (const Mor& g : homs(s, below)) {
        const Mor acc = inst.compose(to_base, g);
        if (!is_op_morphism(inst, acc)) continue;
        for (const Mor& sk : homs(c.T(k), s)) {
          if (inst.compose(g, sk) != want) continue;
          if (!is_quasibijection(inst, sk)) continue;
          gs.push_back(g);
          rungs.push_back(sk);
          step(acc);
          gs.pop_back();
          rungs.pop_back();
        }
      }
    }
  };
  step(inst.identity(inst.cod(sigma0)));
  return out;
}

Ladder top_face_ladder(const OperadicInstance& inst, const Ladder& l) {
  if (l.source.length() < 1) throw IndexError("a 0-ladder has no top face");
  return lift(inst, top_face(inst, l.source), l.sigma[1]);
}

BetaComponent beta(const OperadicInstance& inst, int n, const Chain& p) {
  if (n < 0 || p.length() != n + 2) {
    throw ShapeError("beta_" + std::to_string(n) + " needs a chain of length " +
                     std::to_string(n + 2));
  }
  const Chain src = d(inst, n + 1, d(inst, n + 1, p));
  return {p, lift(inst, src, pi_of(inst, p.f(2)))};
}

Ladder beta_direct(const OperadicInstance& inst, int n, const Chain& p) {
  const Chain src = d(inst, n + 1, d(inst, n + 1, p));
  const Chain tgt = d(inst, n + 1, d(inst, n + 2, p));
  const Mor bottom = pi_of(inst, p.f(2));
  Ladder l{src, tgt, {bottom}};
  Mor upper = inst.identity(p.T(2));
  for (int k = 1; k <= n; ++k) {
    upper = inst.compose(upper, p.f(k + 2));
    l.sigma.push_back(pi_of(inst, inst.compose(bottom, eta_of(inst, upper))));
  }
  return l;
}

namespace {

struct ChainHash {
  std::size_t operator()(const Chain& c) const {
    std::size_t h = std::hash<int>()(c.T(0));
    for (const Mor& f : c.maps_bottom_up()) {
      h ^= std::hash<FinMap>()(f) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// r on W chains, memoized for the lifetime of one sweep.
class ReflectMemo {
 public:
  explicit ReflectMemo(const OperadicInstance& inst) : inst_(inst) {}
  const Chain& operator()(const Chain& w) {
    auto it = memo_.find(w);
    if (it == memo_.end()) it = memo_.emplace(w, reflect_chain(inst_, w).chain).first;
    return it->second;
  }

 private:
  const OperadicInstance& inst_;
  std::unordered_map<Chain, Chain, ChainHash> memo_;
};

class StrictSweep {
 public:
  StrictSweep(const OperadicInstance& inst, int bound, int maxlen,
              const TopFaceFn& top)
      : inst_(inst), bound_(bound), maxlen_(maxlen), top_(top), r_(inst) {
    rep_.name = "strict identities(" + inst.name() + ", bound " +
                std::to_string(bound) + ", maxlen " + std::to_string(maxlen) +
                ")";
  }

  Report run() {
    std::vector<std::vector<Chain>> P;
    for (int m = 0; m <= maxlen_; ++m) P.push_back(enumerate_p(inst_, m, bound_));
    for (int m = 0; m <= maxlen_; ++m) {
      for (const Chain& c : P[static_cast<std::size_t>(m)]) {
        closure(c);
        if (m >= 2) face_face(c);
        if (m + 1 <= maxlen_) face_degeneracy(c);
        if (m + 2 <= maxlen_) degeneracy_degeneracy(c);
      }
    }
    for (int m = 0; m <= maxlen_; ++m) {
      for (const Chain& w : enumerate_chains(inst_, m, bound_)) naturality(w);
    }
    return rep_;
  }

 private:
  Chain dd(int i, const Chain& c) {
    if (i == c.length()) {
      return top_ ? top_(inst_, c) : r_(w_face(inst_, i, c));
    }
    return face(inst_, i, c);
  }

  // name() builds the family label, only on failure.
  template <class Name>
  void same(Name&& name, const Chain& witness, const Chain& lhs,
            const Chain& rhs) {
    rep_.check(lhs == rhs && is_locally_op(inst_, lhs), [&] {
      auto shown = [&](const Chain& x) {
        return x.str() + (is_locally_op(inst_, x) ? "" : " (not in P)");
      };
      return Violation{name() + " [" + witness.str() + "]",
                       witness.maps_bottom_up(), shown(lhs), shown(rhs)};
    });
  }

  void closure(const Chain& c) {
    const int m = c.length();
    for (int i = 0; i <= m && m >= 1; ++i) {
      const Chain x = dd(i, c);
      rep_.check(is_locally_op(inst_, x), [&] {
        return Violation{"closure d_" + std::to_string(i) + " [" + c.str() + "]",
                         c.maps_bottom_up(), x.str(), "locally order-preserving"};
      });
    }
    for (int i = 0; i <= m && m + 1 <= maxlen_; ++i) {
      const Chain x = degeneracy(inst_, i, c);
      rep_.check(is_locally_op(inst_, x), [&] {
        return Violation{"closure s_" + std::to_string(i) + " [" + c.str() + "]",
                         c.maps_bottom_up(), x.str(), "locally order-preserving"};
      });
    }
  }

  void face_face(const Chain& c) {
    const int m = c.length();
    for (int j = 1; j <= m; ++j) {
      for (int i = 0; i < j; ++i) {
        if (j == m && i == m - 1) continue;  // replaced by beta
        const auto name = [&] {
          const std::string si = std::to_string(i);
          if (j == m) return "(i) d_" + si + " d_top = d_top d_" + si;
          return "d_" + si + " d_" + std::to_string(j) + " = d_" +
                 std::to_string(j - 1) + " d_" + si;
        };
        same(name, c, dd(i, dd(j, c)), dd(j - 1, dd(i, c)));
      }
    }
  }

  void face_degeneracy(const Chain& c) {
    const int m = c.length();
    for (int j = 0; j <= m; ++j) {
      const Chain s = degeneracy(inst_, j, c);
      for (int i = 0; i <= m + 1; ++i) {
        const std::string si = std::to_string(i);
        const std::string sj = std::to_string(j);
        const bool top = i == m + 1;
        if (i < j) {
          same([&] { return "d_" + si + " s_" + sj + " = s_" + std::to_string(j - 1) + " d_" + si; },
               c, dd(i, s), degeneracy(inst_, j - 1, dd(i, c)));
        } else if (i == j || i == j + 1) {
          same([&] { return top ? std::string("(iii) d_top s_top = 1")
                                : "d_" + si + " s_" + sj + " = 1"; },
               c, dd(i, s), c);
        } else {
          same([&] {
                 return top ? "(ii) d_top s_" + sj + " = s_" + sj + " d_top"
                            : "d_" + si + " s_" + sj + " = s_" + sj + " d_" +
                                  std::to_string(i - 1);
               },
               c, dd(i, s), degeneracy(inst_, j, dd(i - 1, c)));
        }
      }
    }
  }

  void degeneracy_degeneracy(const Chain& c) {
    const int m = c.length();
    for (int j = 0; j <= m; ++j) {
      for (int i = 0; i <= j; ++i) {
        same([&] {
               return "s_" + std::to_string(i) + " s_" + std::to_string(j) +
                      " = s_" + std::to_string(j + 1) + " s_" + std::to_string(i);
             },
             c, degeneracy(inst_, i, degeneracy(inst_, j, c)),
             degeneracy(inst_, j + 1, degeneracy(inst_, i, c)));
      }
    }
  }

  void naturality(const Chain& w) {
    const int m = w.length();
    const Chain rw = r_(w);
    for (int i = 0; i + 1 <= m; ++i) {
      same([&] { return "r natural for d_" + std::to_string(i); }, w,
           face(inst_, i, rw), r_(w_face(inst_, i, w)));
    }
    for (int i = 0; i <= m && m + 1 <= maxlen_; ++i) {
      same([&] { return "r natural for s_" + std::to_string(i); }, w,
           degeneracy(inst_, i, rw), r_(w_degeneracy(inst_, i, w)));
    }
  }

  const OperadicInstance& inst_;
  int bound_;
  int maxlen_;
  TopFaceFn top_;
  ReflectMemo r_;
  Report rep_;
};

}  // namespace

Report verify_strict_identities(const OperadicInstance& inst, int bound,
                                int maxlen, const TopFaceFn& top) {
  if (bound < 1 || maxlen < 1) {
    throw std::invalid_argument("bound and maxlen must be >= 1");
  }
  return StrictSweep(inst, bound, maxlen, top).run();
}

Report verify_beta_coherence(const OperadicInstance& inst, int bound,
                             int maxlen) {
  if (bound < 1 || maxlen < 1) {
    throw std::invalid_argument("bound and maxlen must be >= 1");
  }
  Report rep;
  rep.name = "beta coherence(" + inst.name() + ", bound " +
             std::to_string(bound) + ", maxlen " + std::to_string(maxlen) + ")";
  if (maxlen < 3) {
    rep.skipped.push_back("coherence equation needs chains of length 3");
  }
  auto ladder_eq = [&](const std::string& what, const Chain& p,
                       const Ladder& lhs, const Ladder& rhs) {
    rep.check(lhs == rhs, [&] {
      return Violation{what + " [" + p.str() + "]", p.maps_bottom_up(),
                       lhs.str(), rhs.str()};
    });
  };

  // Components: well-typed fop diagrams, determined by their bottom.
  for (int n = 0; n + 2 <= maxlen; ++n) {
    for (const Chain& p : enumerate_p(inst, n + 2, bound)) {
      const BetaComponent b = beta(inst, n, p);
      std::string why;
      rep.check(is_fop_diagram(inst, b.ladder, &why), [&] {
        return Violation{"beta_" + std::to_string(n) + " is a fop diagram [" +
                             p.str() + "]",
                         p.maps_bottom_up(), why, "fop quasibijection ladder"};
      });
      ladder_eq("beta_" + std::to_string(n) + " lift = direct", p, b.ladder,
                beta_direct(inst, n, p));
    }
  }

  // beta_n d_{n+3} . beta_n d_{n+1} = d_{n+1} beta_{n+1} . beta_n d_{n+2}.
  for (int n = 0; n + 3 <= maxlen; ++n) {
    for (const Chain& p : enumerate_p(inst, n + 3, bound)) {
      const Ladder a1 = beta(inst, n, d(inst, n + 1, p)).ladder;
      const Ladder a2 = beta(inst, n, d(inst, n + 3, p)).ladder;
      const Ladder b1 = beta(inst, n, d(inst, n + 2, p)).ladder;
      const Ladder b2 = top_face_ladder(inst, beta(inst, n + 1, p).ladder);
      const bool composable = a1.target == a2.source && b1.target == b2.source;
      rep.check(composable, [&] {
        return Violation{"coh composable (n=" + std::to_string(n) + ") [" +
                             p.str() + "]",
                         p.maps_bottom_up(), a1.target.str() + " / " + a2.source.str(),
                         b1.target.str() + " / " + b2.source.str()};
      });
      if (!composable) continue;
      ladder_eq("coh (n=" + std::to_string(n) + ")", p,
                compose_ladders(inst, a1, a2), compose_ladders(inst, b1, b2));
      if (n == 0) {
        const Mor& f3 = p.f(3);
        const Mor& f2 = p.f(2);
        const Mor lhs = inst.compose(pi_of(inst, eta_rel(inst, f3, f2)),
                                     pi_of(inst, inst.compose(f2, f3)));
        const Mor rhs = inst.compose(
            pi_of(inst, inst.compose(pi_of(inst, f2), eta_of(inst, f3))),
            pi_of(inst, f3));
        rep.check(lhs == rhs, [&] {
          return Violation{"first1 [" + p.str() + "]", p.maps_bottom_up(),
                           lhs.str(), rhs.str()};
        });
      }
    }
  }

  // beta_n at s_{n+1} c and at s_n c is the identity.
  for (int n = 0; n + 2 <= maxlen; ++n) {
    for (const Chain& c : enumerate_p(inst, n + 1, bound)) {
      for (int j : {n + 1, n}) {
        const Chain s = degeneracy(inst, j, c);
        const Ladder b = beta(inst, n, s).ladder;
        ladder_eq("beta_" + std::to_string(n) + " at s_" + std::to_string(j) +
                      " c is the identity",
                  c, b, identity_ladder(inst, b.source));
      }
    }
  }
  return rep;
}

Report verify_opfibration(const OperadicInstance& inst, int n, int bound) {
  if (n < 0 || bound < 1) throw std::invalid_argument("need n >= 0, bound >= 1");
  Report rep;
  rep.name = "opfibration(" + inst.name() + ", n " + std::to_string(n) +
             ", bound " + std::to_string(bound) + ")";
  HomCache homs(inst);
  for (const Chain& c : enumerate_p(inst, n, bound)) {
    for (Obj s0 : inst.objects(bound)) {
      for (const Mor& sigma0 : homs(c.T(0), s0)) {
        if (!is_quasibijection(inst, sigma0)) continue;
        const Ladder l = lift(inst, c, sigma0);
        const std::vector<Ladder> all = search_lifts(inst, c, sigma0, bound);
        rep.check(all.size() == 1 && all.front() == l, [&] {
          std::string found;
          for (const Ladder& x : all) found += x.str() + "; ";
          return Violation{"unique lift [" + c.str() + "]",
                           {sigma0}, l.str(),
                           std::to_string(all.size()) + " lifts: " + found};
        });
      }
    }
  }
  return rep;
}

}  // namespace pita
