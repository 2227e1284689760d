// Incidence bialgebra of the pita nerve of Fin_surj and the desk-scale
// decomposition-space check.
//
// A label is a commutative monomial in the connected classes A_1, A_2, ...
// stored as a weakly decreasing list of block sizes; {} is the unit 1.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pita/factor.hpp"
#include "pita/report.hpp"

namespace pita {

using Label = std::vector<int>;
using Coeff = std::int64_t;

// Monomial of an order-preserving-up-to-pita map: its fibre sizes, sorted
// weakly decreasing.
Label label_of(const FinMap& f);
// The product of monomials: multiset union.
Label label_product(const Label& a, const Label& b);
// "A2.A1.A1"; "1" for the empty label.
std::string label_text(const Label& l);

// Presentation order: larger total degree first, then lexicographically
// larger.
bool label_before(const Label& a, const Label& b);

// Integer combination of tensors L_1 (x) ... (x) L_r of fixed arity r.
// Zero coefficients are never stored.
class Tensor {
 public:
  using Key = std::vector<Label>;

  explicit Tensor(std::size_t arity = 2) : arity_(arity) {}
  std::size_t arity() const { return arity_; }
  void add(const Key& key, Coeff c);
  Coeff coeff(const Key& key) const;
  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Componentwise monomial product; both sides must have equal arity.
  Tensor operator*(const Tensor& o) const;
  bool operator==(const Tensor& o) const = default;

  // Keys in presentation order: factors compared from the right.
  std::vector<Key> ordered_keys() const;
  // "2 A1.A1 (x) A2 + 1 A2 (x) A1"; "0" when empty.
  std::string to_text() const;

 private:
  std::size_t arity_;
  std::map<Key, Coeff> terms_;
};

using CoalgebraElement = Tensor;

// Delta(f) = sum over f = e h, e order-preserving, of label(eta h) (x)
// label(e). Requires the fin-surj instance and f order-preserving; the empty
// map 0 -> 0 gives 1 (x) 1.
CoalgebraElement comult(const OperadicInstance& inst, const FinMap& f);
// Delta extended multiplicatively to a monomial.
CoalgebraElement comult_label(const OperadicInstance& inst, const Label& l);

// For 1 <= k <= n: block-size multiset -> number of set partitions of
// {1..n} with those block sizes.
std::map<Label, Coeff> bell_partial(int n, int k);
// sum_k k! B(n,k)(A_1, A_2, ...) (x) A_k.
CoalgebraElement comult_closed_form(int n);
// sum_k B(n,k)(A_1, A_2, ...) (x) A_k.
CoalgebraElement faa_di_bruno(int n);

Report verify_coassociativity(const OperadicInstance& inst, int bound);
Report verify_bialgebra(const OperadicInstance& inst, int bound);

// One factorisation of a map through a middle object: first, then second.
struct Factorisation {
  FinMap first;
  FinMap second;
  bool operator==(const Factorisation& o) const = default;
  bool operator<(const Factorisation& o) const;
  std::string str() const;
};

// The two fibre categories for the chain T_3 -f-> T_1 -> T_0 = 1.
// C_1: factorisations f = f_2 f_3; a morphism is a quasibijection sigma on
// the middle with sigma f_3 = f~_3, f~_2 sigma = f_2, fop over 1_{T_1}.
// C_2: factorisations eta(f) = e h with e order-preserving, same morphisms.
struct FibreCategories {
  FinMap f;
  std::vector<Factorisation> c1;
  std::vector<Factorisation> c2;
  // Morphisms of C_1 as (source index, target index, sigma).
  std::vector<std::tuple<std::size_t, std::size_t, FinMap>> c1_morphisms;
  std::vector<std::tuple<std::size_t, std::size_t, FinMap>> c2_morphisms;
  // Connected components of C_1.
  std::size_t c1_classes = 0;
  // Components when sigma must be fop over 1_{T_0} instead.
  std::size_t c1_classes_over_base = 0;
};

FibreCategories fibre_categories(const OperadicInstance& inst, const FinMap& f);

Factorisation functor_F(const OperadicInstance& inst, const Factorisation& y);
Factorisation functor_G(const OperadicInstance& inst, const FinMap& f,
                        const Factorisation& x);

// For every f with dom f <= bound: C_2 is discrete, F lands in C_2 and sends
// morphisms to identities, F G = id, the unit pi(f_2) is an invertible C_1
// morphism y -> G F y, automorphism groups of C_1 are trivial and the number
// of classes of C_1 equals |C_2|.
Report verify_decomposition_fibres(const OperadicInstance& inst, int bound);

}  // namespace pita
