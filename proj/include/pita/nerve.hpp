// The pita nerve: W(O)_n, P(O)_n, face and degeneracy operators, beta cells
// and the coherence sweeps.
//
// Index convention. A chain T_n -> ... -> T_0 is read as a simplex whose
// vertex v_k is T_{n-k}. Hence
//   face i       omits T_{n-i}    (standard d_i),
//   degeneracy i doubles T_{n-i}  (standard s_i).
// The top face d_n omits T_0; on P it is r_{n-1} after that omission.
//
//   index i | object touched | on P
//   --------+----------------+----------------------------
//   0       | T_n            | drop f_n
//   0<i<n   | T_{n-i}        | f_{n-i} f_{n-i+1}
//   n       | T_0            | drop f_1, then reflect
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pita/chain.hpp"
#include "pita/factor.hpp"
#include "pita/report.hpp"

namespace pita {

// All n-chains with every object of cardinality <= bound.
std::vector<Chain> enumerate_chains(const OperadicInstance& inst, int n,
                                    int bound);
// The locally order-preserving ones.
std::vector<Chain> enumerate_p(const OperadicInstance& inst, int n, int bound);

// Operators of W(O): 0 <= i <= n.
Chain w_face(const OperadicInstance& inst, int i, const Chain& c);
Chain w_degeneracy(const OperadicInstance& inst, int i, const Chain& c);

// Operators of P(O). face is defined for 0 <= i <= n-1, top_face for n >= 1.
Chain face(const OperadicInstance& inst, int i, const Chain& c);
Chain top_face(const OperadicInstance& inst, const Chain& c);
Chain degeneracy(const OperadicInstance& inst, int i, const Chain& c);
// d_i for 0 <= i <= n, dispatching to top_face at i = n.
Chain d(const OperadicInstance& inst, int i, const Chain& c);

// The unique morphism of P(O)_n out of c whose bottom rung is sigma0.
Ladder lift(const OperadicInstance& inst, const Chain& c, const Mor& sigma0);

// All morphisms of P(O)_n out of c with bottom sigma0, by exhaustive search
// over targets of cardinality <= bound and quasibijection rungs.
std::vector<Ladder> search_lifts(const OperadicInstance& inst, const Chain& c,
                                 const Mor& sigma0, int bound);

// The top face operator applied to a morphism of P(O)_n, n >= 1.
Ladder top_face_ladder(const OperadicInstance& inst, const Ladder& l);

struct BetaComponent {
  Chain p;
  Ladder ladder;
};

// beta_n at p in P(O)_{n+2}: a morphism d_{n+1} d_{n+1} p -> d_{n+1} d_{n+2} p
// with bottom pi(f_2), built as the lift of that bottom.
BetaComponent beta(const OperadicInstance& inst, int n, const Chain& p);
// The same component assembled rung by rung: source and target from the face
// operators, k-th rung pi(pi(f_2) eta(f_3 ... f_{k+2})).
Ladder beta_direct(const OperadicInstance& inst, int n, const Chain& p);

using TopFaceFn = std::function<Chain(const OperadicInstance&, const Chain&)>;

// Every simplicial identity except d_n d_{n+1} = d_n d_n, the three
// top-face families, closure of P under the operators and naturality of r.
// top overrides the top face operator (mutation testing).
Report verify_strict_identities(const OperadicInstance& inst, int bound,
                                int maxlen, const TopFaceFn& top = nullptr);

// Coherence of beta on chains of length <= maxlen (>= 3 for the main
// equation), the n = 0 form of it, and triviality on degenerate chains.
Report verify_beta_coherence(const OperadicInstance& inst, int bound,
                             int maxlen = 3);

// For every p in P(O)_n and quasibijection sigma0 out of T_0: exactly one
// lift, equal to lift().
Report verify_opfibration(const OperadicInstance& inst, int n, int bound);

}  // namespace pita
