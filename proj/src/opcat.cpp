#include "pita/opcat.hpp"

#include <map>
#include <string>

namespace pita {

std::optional<Mor> OperadicInstance::inverse(const Mor& f) const {
  const Obj x = dom(f);
  const Obj y = cod(f);
  for (const Mor& g : hom(y, x)) {
    if (compose(g, f) == identity(x) && compose(f, g) == identity(y)) {
      return g;
    }
  }
  return std::nullopt;
}

bool is_quasibijection(const OperadicInstance& inst, const Mor& f) {
  const int n = inst.cardinality(inst.cod(f));
  for (int i = 1; i <= n; ++i) {
    if (!inst.is_chosen_terminal(inst.fibre(f, i))) return false;
  }
  return true;
}

bool is_op_morphism(const OperadicInstance& inst, const Mor& f) {
  return is_order_preserving(inst.cardinality(f));
}

bool is_fop_square(const OperadicInstance& inst, const Mor& sigma,
                   const Mor& tau, const Mor& f, const Mor& g) {
  if (inst.dom(sigma) != inst.dom(f) || inst.cod(sigma) != inst.dom(g) ||
      inst.dom(tau) != inst.cod(f) || inst.cod(tau) != inst.cod(g)) {
    throw ShapeError("square edges do not meet");
  }
  if (inst.compose(g, sigma) != inst.compose(tau, f)) {
    throw ShapeError("square does not commute: g*sigma = " +
                     inst.compose(g, sigma).str() +
                     ", tau*f = " + inst.compose(tau, f).str());
  }
  const int n = inst.cardinality(inst.cod(g));
  for (int i = 1; i <= n; ++i) {
    if (!is_op_morphism(inst, inst.fibre_morphism(sigma, g, i))) return false;
  }
  return true;
}

namespace {

std::string show(Obj x) { return "obj " + std::to_string(x); }

class AxiomSweep {
 public:
  AxiomSweep(const OperadicInstance& inst, int bound, AxiomOptions opts)
      : inst_(inst), objs_(inst.objects(bound)) {
    report_.name = "axioms(" + inst.name() + ", bound " +
                   std::to_string(bound) + ")";
    report_.limit = opts.limit;
    for (Obj a : objs_) {
      for (Obj b : objs_) hom_[{a, b}] = inst.hom(a, b);
    }
  }

  Report run() {
    objects_pass();
    morphism_pass();
    pair_pass();
    triple_pass();
    return report_;
  }

 private:
  Obj fibre_checked(const Mor& f, int i) {
    const Obj u = inst_.fibre(f, i);
    if (!inst_.has_object(u)) {
      throw IntegrityError("fibre of " + f.str() + " at " + std::to_string(i) +
                           " is not an object of " + inst_.name());
    }
    return u;
  }

  void objects_pass() {
    for (Obj x : objs_) {
      if (report_.full()) return;
      const Obj u = inst_.chosen_terminal(x);
      const Mor tau = inst_.terminal_map(x);
      const Mor idx = inst_.identity(x);
      report_.expect(inst_.has_object(u), "D1 terminal is an object", {tau},
                     show(u), "object of " + inst_.name());
      report_.expect(inst_.dom(tau) == x && inst_.cod(tau) == u &&
                         inst_.has_morphism(tau),
                     "D1 tau_X : X -> U_X", {tau},
                     show(inst_.dom(tau)) + " -> " + show(inst_.cod(tau)),
                     show(x) + " -> " + show(u));
      report_.expect(inst_.chosen_terminal(u) == u, "D1 idempotent choice",
                     {tau}, show(inst_.chosen_terminal(u)), show(u));
      report_.expect(inst_.cardinality(u) == 1, "A1", {tau},
                     "|U_X| = " + std::to_string(inst_.cardinality(u)), "1");
      report_.expect(
          inst_.cardinality(idx) == FinMap::identity(inst_.cardinality(x)),
          "D2 identities", {idx}, inst_.cardinality(idx).str(),
          FinMap::identity(inst_.cardinality(x)).str());
      for (int i = 1; i <= inst_.cardinality(x); ++i) {
        const Obj fi = fibre_checked(idx, i);
        report_.expect(inst_.is_chosen_terminal(fi), "A2", {idx}, show(fi),
                       "chosen terminal");
      }
      if (inst_.cardinality(u) == 1 && inst_.dom(tau) == x) {
        const Obj back = fibre_checked(tau, 1);
        report_.expect(back == x, "A4 tau_X^{-1}(1) = X", {tau}, show(back),
                       show(x));
      }
    }
  }

  void morphism_pass() {
    for (Obj t : objs_) {
      for (Obj s : objs_) {
        for (const Mor& f : hom_[{t, s}]) {
          if (report_.full()) return;
          const FinMap cf = inst_.cardinality(f);
          report_.expect(cf.dom() == inst_.cardinality(t) &&
                             cf.cod() == inst_.cardinality(s),
                         "D2 endpoints", {f}, cf.str(), show(t) + "->" + show(s));
          const Mor tau = inst_.terminal_map(s);
          if (inst_.dom(tau) == s && inst_.cardinality(inst_.cod(tau)) == 1) {
            const Mor back = inst_.fibre_morphism(f, tau, 1);
            report_.expect(back == f, "A4 f^{tau}_1 = f", {f, tau}, back.str(),
                           f.str());
          }
          for (int i = 1; i <= inst_.cardinality(s); ++i) {
            const Obj fi = fibre_checked(f, i);
            const int expect = fibre(cf, i).size;
            report_.expect(inst_.cardinality(fi) == expect, "A3 |f^{-1}(i)|",
                           {f}, std::to_string(inst_.cardinality(fi)),
                           std::to_string(expect));
            const Mor idt = inst_.identity(t);
            const Mor fid = inst_.fibre_morphism(idt, f, i);
            report_.expect(fid == inst_.identity(fi), "D3 identities", {idt, f},
                           fid.str(), inst_.identity(fi).str());
          }
        }
      }
    }
  }

  // g : u -> t, f : t -> s.
  void pair_pass() {
    for (Obj u : objs_) {
      for (Obj t : objs_) {
        for (Obj s : objs_) {
          for (const Mor& g : hom_[{u, t}]) {
            const FinMap cg = inst_.cardinality(g);
            for (const Mor& f : hom_[{t, s}]) {
              if (report_.full()) return;
              check_pair(g, cg, f);
            }
          }
        }
      }
    }
  }

  void check_pair(const Mor& g, const FinMap& cg, const Mor& f) {
    const Mor fg = inst_.compose(f, g);
    const FinMap cf = inst_.cardinality(f);
    const FinMap cfg = inst_.cardinality(fg);
    report_.check(cfg == cf * cg, [&] {
      return Violation{"D2 composition", {g, f}, cfg.str(),
          (cf * cg).str()};
    });
    for (int i = 1; i <= cf.cod(); ++i) {
      const Mor gi = inst_.fibre_morphism(g, f, i);
      const Obj src = fibre_checked(fg, i);
      const Obj dst = fibre_checked(f, i);
      report_.check(inst_.dom(gi) == src && inst_.cod(gi) == dst &&
                    inst_.has_morphism(gi), [&] {
        return Violation{"D3 fibre morphism typing", {g, f}, gi.str(),
            show(src) + " -> " + show(dst)};
      });
      const FinMap lhs = inst_.cardinality(gi);
      const FinMap rhs = fibre_map(cg, cf, i);
      report_.check(lhs == rhs, [&] {
        return Violation{"A3 |g^f_i|", {g, f}, lhs.str(), rhs.str()};
      });
      const Fibre eps = fibre(cf, i);
      for (int j = 1; j <= eps.size; ++j) {
        const int k = eps.epsilon[static_cast<std::size_t>(j - 1)];
        const Obj a = fibre_checked(gi, j);
        const Obj b = fibre_checked(g, k);
        report_.check(a == b, [&] {
          return Violation{"A5 (g^f_i)^{-1}(j) = g^{-1}(eps j)", {g, f},
              show(a), show(b)};
        });
      }
    }
  }

  // h : v -> u, g : u -> t, f : t -> s.
  void triple_pass() {
    for (Obj u : objs_) {
      for (Obj t : objs_) {
        for (const Mor& g : hom_[{u, t}]) {
          for (Obj v : objs_) {
            const auto& hs = hom_[{v, u}];
            // h^g_k for every h into u, indexed [h][k-1].
            std::vector<std::vector<Mor>> hg(hs.size());
            for (std::size_t a = 0; a < hs.size(); ++a) {
              for (int k = 1; k <= inst_.cardinality(t); ++k) {
                hg[a].push_back(inst_.fibre_morphism(hs[a], g, k));
              }
            }
            for (Obj s : objs_) {
              for (const Mor& f : hom_[{t, s}]) {
                if (report_.full()) return;
                check_triples(hs, hg, g, f);
              }
            }
          }
        }
      }
    }
  }

  void check_triples(const std::vector<Mor>& hs,
                     const std::vector<std::vector<Mor>>& hg, const Mor& g,
                     const Mor& f) {
    const Mor fg = inst_.compose(f, g);
    const FinMap cf = inst_.cardinality(f);
    const int n = cf.cod();
    std::vector<Mor> gf(static_cast<std::size_t>(n));
    std::vector<Fibre> eps(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      gf[static_cast<std::size_t>(i - 1)] = inst_.fibre_morphism(g, f, i);
      eps[static_cast<std::size_t>(i - 1)] = fibre(cf, i);
    }
    for (std::size_t a = 0; a < hs.size(); ++a) {
      const Mor& h = hs[a];
      const Mor gh = inst_.compose(g, h);
      for (int i = 1; i <= n; ++i) {
        const Mor& gfi = gf[static_cast<std::size_t>(i - 1)];
        const Mor hfgi = inst_.fibre_morphism(h, fg, i);
        const Mor lhs = inst_.fibre_morphism(gh, f, i);
        const Mor rhs = inst_.compose(gfi, hfgi);
        report_.check(lhs == rhs, [&] {
          return Violation{"D3 composition", {h, g, f}, lhs.str(),
              rhs.str()};
        });
        const Fibre& e = eps[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= e.size; ++j) {
          const int k = e.epsilon[static_cast<std::size_t>(j - 1)];
          const Mor twice = inst_.fibre_morphism(hfgi, gfi, j);
          const Mor& once = hg[a][static_cast<std::size_t>(k - 1)];
          report_.check(twice == once, [&] {
            return Violation{"A5 (h^{fg}_i)^{g^f_i}_j = h^g_{eps j}", {h, g, f},
                twice.str(), once.str()};
          });
        }
      }
    }
  }

  const OperadicInstance& inst_;
  std::vector<Obj> objs_;
  std::map<std::pair<Obj, Obj>, std::vector<Mor>> hom_;
  Report report_;
};

}  // namespace

Report verify_axioms(const OperadicInstance& inst, int bound,
                     AxiomOptions opts) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  return AxiomSweep(inst, bound, opts).run();
}

}  // namespace pita
