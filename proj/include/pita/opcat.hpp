// Operadic categories presented through a finite query interface.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pita/finskel.hpp"
#include "pita/report.hpp"

namespace pita {

// Objects are natural-number handles; morphisms are their FinMap data, with
// dom/cod read off the map.
using Obj = int;
using Mor = FinMap;

class ShapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OperadicInstance {
 public:
  virtual ~OperadicInstance() = default;

  virtual std::string name() const = 0;
  // All objects with cardinality <= bound, ascending.
  virtual std::vector<Obj> objects(int bound) const = 0;
  virtual bool has_object(Obj x) const = 0;
  virtual std::vector<Mor> hom(Obj x, Obj y) const = 0;
  virtual bool has_morphism(const Mor& f) const = 0;

  virtual Obj dom(const Mor& f) const { return f.dom(); }
  virtual Obj cod(const Mor& f) const { return f.cod(); }
  virtual Mor identity(Obj x) const { return FinMap::identity(x); }
  // Mathematical order: compose(f, g) = f after g.
  virtual Mor compose(const Mor& f, const Mor& g) const { return f * g; }

  // The cardinality functor to skeletal Fin.
  virtual int cardinality(Obj x) const { return x; }
  virtual FinMap cardinality(const Mor& f) const { return f; }

  // Chosen local terminal U_X and the map tau_X : X -> U_X.
  virtual Obj chosen_terminal(Obj x) const = 0;
  virtual Mor terminal_map(Obj x) const = 0;

  // Fibre functor: f^{-1}(i) and g^f_i : (fg)^{-1}(i) -> f^{-1}(i).
  virtual Obj fibre(const Mor& f, int i) const = 0;
  virtual Mor fibre_morphism(const Mor& g, const Mor& f, int i) const = 0;

  // True when cardinality is the identity and fibres agree with finskel, so
  // the concrete pita algorithm applies.
  virtual bool fin_like() const { return false; }

  // Two-sided inverse found by search when none is known in closed form.
  virtual std::optional<Mor> inverse(const Mor& f) const;

  bool is_chosen_terminal(Obj u) const {
    return has_object(u) && chosen_terminal(u) == u;
  }
};

bool is_quasibijection(const OperadicInstance& inst, const Mor& f);
bool is_op_morphism(const OperadicInstance& inst, const Mor& f);

// Square  T --sigma--> T'
//         |f           |g
//         S --tau----> S'
// Throws ShapeError unless g sigma = tau f.
bool is_fop_square(const OperadicInstance& inst, const Mor& sigma,
                   const Mor& tau, const Mor& f, const Mor& g);

struct AxiomOptions {
  // Stop after this many violations; 0 sweeps everything.
  std::size_t limit = 0;
};

Report verify_axioms(const OperadicInstance& inst, int bound,
                     AxiomOptions opts = {});

}  // namespace pita
