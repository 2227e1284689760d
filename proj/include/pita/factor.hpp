// Pita calculus on a strictly factorisable instance: pi, eta, eta(f/g),
// omega(sigma, tau) and chainwise reflection.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pita/chain.hpp"
#include "pita/opcat.hpp"

namespace pita {

// Production trusts closed forms; Oracle also searches and demands that the
// search finds exactly the closed-form answer.
enum class Mode { Production, Oracle };

class NotStrictlyFactorisable : public std::runtime_error {
 public:
  NotStrictlyFactorisable(const std::string& what, std::vector<Mor> witnesses)
      : std::runtime_error(what), witnesses_(std::move(witnesses)) {}
  const std::vector<Mor>& witnesses() const { return witnesses_; }

 private:
  std::vector<Mor> witnesses_;
};

class UnsupportedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PitaFactorisation {
  Mor f;
  Mor pi;
  Obj mid = 0;
  Mor eta;
};

// All fop factorisations f = eta pi with pi a quasibijection and eta
// order-preserving, by exhaustive search.
std::vector<PitaFactorisation> search_pita(const OperadicInstance& inst,
                                           const Mor& f);

PitaFactorisation pita_general(const OperadicInstance& inst, const Mor& f,
                               Mode mode = Mode::Production);
inline Mor pi_of(const OperadicInstance& inst, const Mor& f) {
  return pita_general(inst, f).pi;
}
inline Mor eta_of(const OperadicInstance& inst, const Mor& f) {
  return pita_general(inst, f).eta;
}

enum class EtaRelMethod { Formula, Search, Auto };

// eta(f/g) for f : T -> S, g : S -> R: the unique x with
// eta(g) x = eta(gf) and x pi(gf) = pi(g) f.
Mor eta_rel(const OperadicInstance& inst, const Mor& f, const Mor& g,
            EtaRelMethod method = EtaRelMethod::Auto);

// All fillers x of the two defining equations of eta(f/g).
std::vector<Mor> eta_rel_fillers(const OperadicInstance& inst, const Mor& f,
                                 const Mor& g);

// Square  T --sigma--> T'
//         |f           |g
//         S --tau----> S'
// with tau a quasibijection. omega is the unique map between the pita middles
// with omega pi(f) = pi(g) sigma and eta(g) omega = tau eta(f).
Mor omega(const OperadicInstance& inst, const Mor& sigma, const Mor& tau,
          const Mor& f, const Mor& g, Mode mode = Mode::Production);

struct Reflection {
  Chain chain;
  Ladder unit;
};

// r_n: k-th map eta(f_k / f_1...f_{k-1}); unit rungs pi(f_1...f_k), bottom 1.
Reflection reflect_chain(const OperadicInstance& inst, const Chain& c);

}  // namespace pita
