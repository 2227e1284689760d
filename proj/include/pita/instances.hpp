// Concrete operadic categories built on skeletal Fin.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pita/opcat.hpp"

namespace pita {

// All maps between ordinals 0, 1, 2, ...; the chosen terminal is 1.
class FinInstance : public OperadicInstance {
 public:
  std::string name() const override { return "fin"; }
  std::vector<Obj> objects(int bound) const override;
  bool has_object(Obj x) const override { return x >= min_object(); }
  std::vector<Mor> hom(Obj x, Obj y) const override;
  bool has_morphism(const Mor& f) const override;

  Obj chosen_terminal(Obj) const override { return 1; }
  Mor terminal_map(Obj x) const override { return FinMap::terminal(x); }

  Obj fibre(const Mor& f, int i) const override;
  Mor fibre_morphism(const Mor& g, const Mor& f, int i) const override;

  bool fin_like() const override { return true; }
  std::optional<Mor> inverse(const Mor& f) const override;

 protected:
  virtual int min_object() const { return 0; }
  virtual bool admits(const FinMap& f) const;
};

// Surjections only. The empty ordinal is not an object.
class FinSurjInstance : public FinInstance {
 public:
  std::string name() const override { return "fin-surj"; }

 protected:
  int min_object() const override { return 1; }
  bool admits(const FinMap& f) const override;
};

// Weakly increasing maps only.
class OrderPreservingInstance : public FinInstance {
 public:
  std::string name() const override { return "op"; }

 protected:
  bool admits(const FinMap& f) const override;
};

std::unique_ptr<OperadicInstance> make_fin();
std::unique_ptr<OperadicInstance> make_fin_surj();
std::unique_ptr<OperadicInstance> make_op();

const std::vector<std::string>& instance_names();
// Throws std::invalid_argument on an unknown name.
std::unique_ptr<OperadicInstance> make_instance(const std::string& name);

// For every order-preserving h : T -> R and every family
// f_i : h^{-1}(i) -> F_i, exactly one factorisation h = g f with g
// order-preserving and f^g_i = f_i. Objects T, R, F_i range over the bound.
Report check_weak_blowup(const OperadicInstance& inst, int bound);
bool satisfies_weak_blowup(const OperadicInstance& inst, int bound);

}  // namespace pita
