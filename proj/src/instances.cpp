#include "pita/instances.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace pita {

std::vector<Obj> FinInstance::objects(int bound) const {
  std::vector<Obj> out;
  for (int x = min_object(); x <= bound; ++x) out.push_back(x);
  return out;
}

std::vector<Mor> FinInstance::hom(Obj x, Obj y) const {
  std::vector<Mor> out;
  if (!has_object(x) || !has_object(y)) return out;
  for_each_map(x, y, [&](const FinMap& f) {
    if (admits(f)) out.push_back(f);
  });
  return out;
}

bool FinInstance::has_morphism(const Mor& f) const {
  return has_object(f.dom()) && has_object(f.cod()) && admits(f);
}

bool FinInstance::admits(const FinMap&) const { return true; }

Obj FinInstance::fibre(const Mor& f, int i) const {
  return pita::fibre(f, i).size;
}

Mor FinInstance::fibre_morphism(const Mor& g, const Mor& f, int i) const {
  return fibre_map(g, f, i);
}

std::optional<Mor> FinInstance::inverse(const Mor& f) const {
  if (!is_bijection(f)) return std::nullopt;
  return pita::inverse(f);
}

bool FinSurjInstance::admits(const FinMap& f) const {
  return is_surjective(f);
}

bool OrderPreservingInstance::admits(const FinMap& f) const {
  return is_order_preserving(f);
}

std::unique_ptr<OperadicInstance> make_fin() {
  return std::make_unique<FinInstance>();
}

std::unique_ptr<OperadicInstance> make_fin_surj() {
  return std::make_unique<FinSurjInstance>();
}

std::unique_ptr<OperadicInstance> make_op() {
  return std::make_unique<OrderPreservingInstance>();
}

const std::vector<std::string>& instance_names() {
  static const std::vector<std::string> names = {"fin", "fin-surj", "op"};
  return names;
}

std::unique_ptr<OperadicInstance> make_instance(const std::string& name) {
  if (name == "fin") return make_fin();
  if (name == "fin-surj") return make_fin_surj();
  if (name == "op") return make_op();
  throw std::invalid_argument("unknown instance '" + name +
                              "' (expected fin, fin-surj or op)");
}

namespace {

std::string family_str(const std::vector<Mor>& fs) {
  std::string s = "(";
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) s += ", ";
    s += fs[k].str();
  }
  return s + ")";
}

}  // namespace

Report check_weak_blowup(const OperadicInstance& inst, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  Report rep;
  rep.name = "weak blow-up(" + inst.name() + ", bound " +
             std::to_string(bound) + ")";
  const std::vector<Obj> objs = inst.objects(bound);
  std::map<std::pair<Obj, Obj>, std::vector<Mor>> cache;
  auto homs = [&](Obj a, Obj b) -> const std::vector<Mor>& {
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::pair{a, b}, inst.hom(a, b)).first;
    return it->second;
  };
  for (Obj t : objs) {
    for (Obj r : objs) {
      for (const Mor& h : inst.hom(t, r)) {
        if (!is_op_morphism(inst, h)) continue;
        const int nr = inst.cardinality(r);
        std::vector<Obj> sources;
        for (int i = 1; i <= nr; ++i) sources.push_back(inst.fibre(h, i));
        std::vector<Mor> family(static_cast<std::size_t>(nr));
        std::function<void(int, int)> choose = [&](int i, int width) {
          if (i > nr) {
            int found = 0;
            for (Obj s : inst.objects(width)) {
              if (inst.cardinality(s) != width) continue;
              for (const Mor& g : homs(s, r)) {
                if (!is_op_morphism(inst, g)) continue;
                for (const Mor& f : homs(t, s)) {
                  if (inst.compose(g, f) != h) continue;
                  bool match = true;
                  for (int k = 1; k <= nr && match; ++k) {
                    match = inst.fibre_morphism(f, g, k) ==
                            family[static_cast<std::size_t>(k - 1)];
                  }
                  if (match) ++found;
                }
              }
            }
            rep.expect(found == 1, "weak blow-up", {h}, family_str(family),
                       std::to_string(found) + " factorisations");
            return;
          }
          const Obj src = sources[static_cast<std::size_t>(i - 1)];
          for (Obj target : objs) {
            for (const Mor& fi : homs(src, target)) {
              family[static_cast<std::size_t>(i - 1)] = fi;
              choose(i + 1, width + inst.cardinality(target));
            }
          }
        };
        choose(1, 0);
      }
    }
  }
  return rep;
}

bool satisfies_weak_blowup(const OperadicInstance& inst, int bound) {
  return check_weak_blowup(inst, bound).ok();
}

}  // namespace pita
