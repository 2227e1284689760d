#include "pita/factor.hpp"

namespace pita {

std::vector<PitaFactorisation> search_pita(const OperadicInstance& inst,
                                           const Mor& f) {
  std::vector<PitaFactorisation> out;
  const Obj t = inst.dom(f);
  const Obj s = inst.cod(f);
  const int n = inst.cardinality(t);
  const Mor ids = inst.identity(s);
  for (Obj mid : inst.objects(n)) {
    if (inst.cardinality(mid) != n) continue;
    const std::vector<Mor> etas = inst.hom(mid, s);
    for (const Mor& pi : inst.hom(t, mid)) {
      if (!is_quasibijection(inst, pi)) continue;
      for (const Mor& eta : etas) {
        if (!is_op_morphism(inst, eta)) continue;
        if (inst.compose(eta, pi) != f) continue;
        if (!is_fop_square(inst, pi, ids, f, eta)) continue;
        out.push_back({f, pi, mid, eta});
      }
    }
  }
  return out;
}

PitaFactorisation pita_general(const OperadicInstance& inst, const Mor& f,
                               Mode mode) {
  if (inst.fin_like() && mode == Mode::Production) {
    PitaPair p = pita::pita(f);
    return {f, p.pi, inst.cod(p.pi), p.eta};
  }
  std::vector<PitaFactorisation> found = search_pita(inst, f);
  if (found.size() != 1) {
    std::vector<Mor> w{f};
    for (const auto& p : found) {
      w.push_back(p.pi);
      w.push_back(p.eta);
    }
    throw NotStrictlyFactorisable(
        std::to_string(found.size()) + " pita factorisations of " + f.str(),
        std::move(w));
  }
  if (inst.fin_like()) {
    PitaPair p = pita::pita(f);
    if (p.pi != found.front().pi || p.eta != found.front().eta) {
      throw NotStrictlyFactorisable(
          "search disagrees with the concrete algorithm on " + f.str(),
          {f, p.pi, p.eta, found.front().pi, found.front().eta});
    }
  }
  return found.front();
}

std::vector<Mor> eta_rel_fillers(const OperadicInstance& inst, const Mor& f,
                                 const Mor& g) {
  const Mor gf = inst.compose(g, f);
  const PitaFactorisation pg = pita_general(inst, g);
  const PitaFactorisation pgf = pita_general(inst, gf);
  const Mor rhs = inst.compose(pg.pi, f);
  std::vector<Mor> out;
  for (const Mor& x : inst.hom(pgf.mid, pg.mid)) {
    if (inst.compose(pg.eta, x) == pgf.eta && inst.compose(x, pgf.pi) == rhs) {
      out.push_back(x);
    }
  }
  return out;
}

Mor eta_rel(const OperadicInstance& inst, const Mor& f, const Mor& g,
            EtaRelMethod method) {
  if (inst.cod(f) != inst.dom(g)) {
    throw CompositionError("eta(f/g) needs cod f = dom g: " + f.str() + ", " +
                           g.str());
  }
  if (method != EtaRelMethod::Search) {
    const Mor gf = inst.compose(g, f);
    const std::optional<Mor> inv = inst.inverse(pi_of(inst, gf));
    if (inv) {
      return inst.compose(inst.compose(pi_of(inst, g), f), *inv);
    }
    if (method == EtaRelMethod::Formula) {
      throw UnsupportedInstance("pi(gf) has no inverse for " + gf.str());
    }
  }
  std::vector<Mor> xs = eta_rel_fillers(inst, f, g);
  if (xs.size() != 1) {
    throw NotStrictlyFactorisable(
        std::to_string(xs.size()) + " fillers for eta(f/g)", {f, g});
  }
  return xs.front();
}

Mor omega(const OperadicInstance& inst, const Mor& sigma, const Mor& tau,
          const Mor& f, const Mor& g, Mode mode) {
  if (inst.dom(sigma) != inst.dom(f) || inst.cod(sigma) != inst.dom(g) ||
      inst.dom(tau) != inst.cod(f) || inst.cod(tau) != inst.cod(g) ||
      inst.compose(g, sigma) != inst.compose(tau, f)) {
    throw ShapeError("omega needs a commuting square");
  }
  if (!is_quasibijection(inst, tau)) {
    throw ShapeError("omega needs tau to be a quasibijection: " + tau.str());
  }
  const PitaFactorisation pf = pita_general(inst, f);
  const PitaFactorisation pg = pita_general(inst, g);
  std::optional<Mor> closed;
  if (const std::optional<Mor> inv = inst.inverse(pf.pi)) {
    closed = inst.compose(inst.compose(pg.pi, sigma), *inv);
  }
  if (closed && mode == Mode::Production) return *closed;
  const Mor lhs = inst.compose(pg.pi, sigma);
  const Mor rhs = inst.compose(tau, pf.eta);
  std::vector<Mor> xs;
  for (const Mor& x : inst.hom(pf.mid, pg.mid)) {
    if (inst.compose(x, pf.pi) == lhs && inst.compose(pg.eta, x) == rhs) {
      xs.push_back(x);
    }
  }
  if (xs.size() != 1 || (closed && xs.front() != *closed)) {
    throw NotStrictlyFactorisable(
        std::to_string(xs.size()) + " solutions for omega", {sigma, tau, f, g});
  }
  return xs.front();
}

Reflection reflect_chain(const OperadicInstance& inst, const Chain& c) {
  const int n = c.length();
  if (n == 0) return {c, identity_ladder(inst, c)};
  std::vector<Mor> maps;
  std::vector<Mor> rungs{inst.identity(c.T(0))};
  maps.reserve(static_cast<std::size_t>(n));
  rungs.reserve(static_cast<std::size_t>(n) + 1);
  Mor below = inst.identity(c.T(0));
  for (int k = 1; k <= n; ++k) {
    const Mor next = inst.compose(below, c.f(k));
    Mor pi_next = pi_of(inst, next);
    // eta(f_k / below) = pi(below) f_k pi(next)^{-1} when the inverse exists.
    if (const std::optional<Mor> inv = inst.inverse(pi_next)) {
      maps.push_back(inst.compose(inst.compose(rungs.back(), c.f(k)), *inv));
    } else {
      maps.push_back(eta_rel(inst, c.f(k), below));
    }
    below = next;
    rungs.push_back(std::move(pi_next));
  }
  Chain r = Chain::from_bottom(inst, maps);
  return {r, Ladder{c, r, rungs}};
}

}  // namespace pita
