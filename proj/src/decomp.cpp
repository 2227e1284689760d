#include "pita/decomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pita {

Label label_of(const FinMap& f) {
  Label l = fibre_sizes(f);
  std::sort(l.begin(), l.end(), std::greater<>());
  return l;
}

Label label_product(const Label& a, const Label& b) {
  Label l = a;
  l.insert(l.end(), b.begin(), b.end());
  std::sort(l.begin(), l.end(), std::greater<>());
  return l;
}

std::string label_text(const Label& l) {
  if (l.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (k) s += ".";
    s += "A" + std::to_string(l[k]);
  }
  return s;
}

bool label_before(const Label& a, const Label& b) {
  const int sa = std::accumulate(a.begin(), a.end(), 0);
  const int sb = std::accumulate(b.begin(), b.end(), 0);
  if (sa != sb) return sa > sb;
  return b < a;
}

void Tensor::add(const Key& key, Coeff c) {
  if (key.size() != arity_) throw std::invalid_argument("tensor arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

Coeff Tensor::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

Tensor Tensor::operator*(const Tensor& o) const {
  if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  Tensor out(arity_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k(arity_);
      for (std::size_t r = 0; r < arity_; ++r) k[r] = label_product(ka[r], kb[r]);
      out.add(k, ca * cb);
    }
  }
  return out;
}

std::vector<Tensor::Key> Tensor::ordered_keys() const {
  std::vector<Key> keys;
  for (const auto& [k, c] : terms_) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    for (std::size_t r = a.size(); r-- > 0;) {
      if (a[r] != b[r]) return label_before(a[r], b[r]);
    }
    return false;
  });
  return keys;
}

std::string Tensor::to_text() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Key& k : ordered_keys()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(coeff(k));
    for (std::size_t r = 0; r < k.size(); ++r) {
      s += (r ? " (x) " : " ") + label_text(k[r]);
    }
  }
  return s;
}

namespace {

void require_fin_surj(const OperadicInstance& inst) {
  if (inst.name() != "fin-surj") {
    throw UnsupportedInstance("the incidence bialgebra is implemented for "
                              "fin-surj only, not " + inst.name());
  }
}

bool is_empty_map(const FinMap& f) { return f.dom() == 0 && f.cod() == 0; }

// Every f = e h with e order-preserving, as (h, e), ordered by mid, then h
// in hom order, then e. Each h is built pointwise from h(x) in e^{-1}(f(x)).
std::vector<Factorisation> op_factorisations(const OperadicInstance& inst,
                                            const FinMap& f) {
  std::vector<Factorisation> out;
  const int m = f.dom();
  for (Obj mid : inst.objects(inst.cardinality(inst.dom(f)))) {
    std::vector<Mor> es;
    for (const Mor& e : inst.hom(mid, inst.cod(f))) {
      if (is_op_morphism(inst, e)) es.push_back(e);
    }
    std::vector<std::pair<std::size_t, Factorisation>> found;
    for (std::size_t k = 0; k < es.size(); ++k) {
      const Mor& e = es[k];
      std::vector<std::vector<int>> choice(static_cast<std::size_t>(m));
      bool possible = true;
      for (int x = 1; x <= m && possible; ++x) {
        choice[static_cast<std::size_t>(x - 1)] = fibre(e, f(x)).epsilon;
        possible = !choice[static_cast<std::size_t>(x - 1)].empty();
      }
      if (!possible) continue;
      std::vector<std::size_t> at(static_cast<std::size_t>(m), 0);
      std::vector<int> vals(static_cast<std::size_t>(m));
      while (true) {
        for (std::size_t x = 0; x < at.size(); ++x) vals[x] = choice[x][at[x]];
        const FinMap h(mid, vals);
        if (inst.has_morphism(h)) found.push_back({k, {h, e}});
        int x = m - 1;
        while (x >= 0 && at[static_cast<std::size_t>(x)] + 1 ==
                             choice[static_cast<std::size_t>(x)].size()) {
          at[static_cast<std::size_t>(x--)] = 0;
        }
        if (x < 0) break;
        ++at[static_cast<std::size_t>(x)];
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      const auto va = a.second.first.to_vector();
      const auto vb = b.second.first.to_vector();
      return va != vb ? va < vb : a.first < b.first;
    });
    for (auto& [k, x] : found) out.push_back(std::move(x));
  }
  return out;
}

Tensor unit_tensor(std::size_t arity) {
  Tensor t(arity);
  t.add(Tensor::Key(arity), 1);
  return t;
}

Coeff factorial(int n) {
  Coeff r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

void partitions(int n, int k, int max_part, Label& cur,
                const std::function<void(const Label&)>& fn) {
  if (k == 0) {
    if (n == 0) fn(cur);
    return;
  }
  for (int a = std::min(n - (k - 1), max_part); a >= 1; --a) {
    if (a * k < n) break;
    cur.push_back(a);
    partitions(n - a, k - 1, a, cur, fn);
    cur.pop_back();
  }
}

CoalgebraElement bell_sum(int n, bool with_factorial) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  CoalgebraElement out;
  for (int k = 1; k <= n; ++k) {
    const Coeff w = with_factorial ? factorial(k) : 1;
    for (const auto& [lambda, count] : bell_partial(n, k)) {
      out.add({lambda, Label{k}}, w * count);
    }
  }
  return out;
}

std::string term_text(const Tensor::Key& k, Coeff c) {
  std::string s = std::to_string(c);
  for (std::size_t r = 0; r < k.size(); ++r) s += (r ? " (x) " : " ") + label_text(k[r]);
  return s;
}

void compare_tensors(Report& rep, const std::string& what, const FinMap& f,
                     const Tensor& lhs, const Tensor& rhs) {
  std::set<Tensor::Key> keys;
  for (const auto& [k, c] : lhs.terms()) keys.insert(k);
  for (const auto& [k, c] : rhs.terms()) keys.insert(k);
  for (const Tensor::Key& k : keys) {
    const Coeff a = lhs.coeff(k);
    const Coeff b = rhs.coeff(k);
    rep.check(a == b, [&] {
      return Violation{what + " [" + f.str() + "]", {f}, term_text(k, a),
                       term_text(k, b)};
    });
  }
}

}  // namespace

CoalgebraElement comult(const OperadicInstance& inst, const FinMap& f) {
  require_fin_surj(inst);
  if (is_empty_map(f)) return unit_tensor(2);
  if (!inst.has_morphism(f)) {
    throw std::domain_error(f.str() + " is not a morphism of " + inst.name());
  }
  if (!is_op_morphism(inst, f)) {
    throw std::domain_error("comult needs an order-preserving map: " + f.str());
  }
  CoalgebraElement out;
  for (const Factorisation& x : op_factorisations(inst, f)) {
    out.add({label_of(eta_of(inst, x.first)), label_of(x.second)}, 1);
  }
  return out;
}

CoalgebraElement comult_label(const OperadicInstance& inst, const Label& l) {
  CoalgebraElement out = unit_tensor(2);
  for (int a : l) out = out * comult(inst, FinMap::terminal(a));
  return out;
}

std::map<Label, Coeff> bell_partial(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  std::map<Label, Coeff> out;
  Label cur;
  partitions(n, k, n, cur, [&](const Label& lambda) {
    Coeff denom = 1;
    std::map<int, int> mult;
    for (int a : lambda) {
      denom *= factorial(a);
      ++mult[a];
    }
    for (const auto& [a, m] : mult) denom *= factorial(m);
    out[lambda] = factorial(n) / denom;
  });
  return out;
}

CoalgebraElement comult_closed_form(int n) { return bell_sum(n, true); }

CoalgebraElement faa_di_bruno(int n) { return bell_sum(n, false); }

Report verify_coassociativity(const OperadicInstance& inst, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  require_fin_surj(inst);
  Report rep;
  rep.name = "coassociativity(" + inst.name() + ", bound " +
             std::to_string(bound) + ")";
  for (Obj m : inst.objects(bound)) {
    for (Obj n : inst.objects(bound)) {
      for (const Mor& f : inst.hom(m, n)) {
        if (!is_op_morphism(inst, f)) continue;
        Tensor left(3);
        Tensor right(3);
        for (const Factorisation& x : op_factorisations(inst, f)) {
          const Mor eh = eta_of(inst, x.first);
          const Label le = label_of(x.second);
          const Label lh = label_of(eh);
          for (const Factorisation& y : op_factorisations(inst, eh)) {
            left.add({label_of(eta_of(inst, y.first)), label_of(y.second), le}, 1);
          }
          for (const Factorisation& y : op_factorisations(inst, x.second)) {
            right.add({lh, label_of(eta_of(inst, y.first)), label_of(y.second)}, 1);
          }
        }
        compare_tensors(rep, "(Delta (x) 1) Delta = (1 (x) Delta) Delta", f,
                        left, right);
      }
    }
  }
  return rep;
}

Report verify_bialgebra(const OperadicInstance& inst, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  require_fin_surj(inst);
  Report rep;
  rep.name = "bialgebra(" + inst.name() + ", bound " + std::to_string(bound) + ")";
  const FinMap empty = FinMap::empty(0);
  compare_tensors(rep, "Delta(empty) = 1 (x) 1", empty, comult(inst, empty),
                  unit_tensor(2));
  std::vector<Mor> ops;
  for (Obj m : inst.objects(bound)) {
    for (Obj n : inst.objects(bound)) {
      for (const Mor& f : inst.hom(m, n)) {
        if (is_op_morphism(inst, f)) ops.push_back(f);
      }
    }
  }
  for (const Mor& f : ops) {
    const Tensor df = comult(inst, f);
    compare_tensors(rep, "Delta(f + empty) = Delta(f)", f,
                    comult(inst, ordinal_sum(f, empty)), df);
    for (const Mor& g : ops) {
      const FinMap fg = ordinal_sum(f, g);
      compare_tensors(rep, "Delta(f + g) = Delta(f) Delta(g) with g = " + g.str(),
                      fg, comult(inst, fg), df * comult(inst, g));
    }
  }
  return rep;
}

bool Factorisation::operator<(const Factorisation& o) const {
  return std::tie(first, second) < std::tie(o.first, o.second);
}

std::string Factorisation::str() const {
  return second.str() + " . " + first.str();
}

namespace {

bool is_fibre_morphism(const OperadicInstance& inst, const Mor& sigma,
                       const Factorisation& a, const Factorisation& b,
                       const Mor& base_tau, bool over_base) {
  if (!is_quasibijection(inst, sigma)) return false;
  if (inst.compose(sigma, a.first) != b.first) return false;
  if (inst.compose(b.second, sigma) != a.second) return false;
  if (!over_base) return is_fop_square(inst, sigma, base_tau, a.second, b.second);
  const Mor t = inst.terminal_map(inst.cod(a.second));
  return is_fop_square(inst, sigma, inst.identity(inst.cod(t)),
                       inst.compose(t, a.second), inst.compose(t, b.second));
}

using MorphismList = std::vector<std::tuple<std::size_t, std::size_t, FinMap>>;

MorphismList morphisms_between(const OperadicInstance& inst,
                               const std::vector<Factorisation>& objs,
                               bool over_base) {
  MorphismList out;
  for (std::size_t a = 0; a < objs.size(); ++a) {
    const Obj ma = inst.cod(objs[a].first);
    const Mor tau = inst.identity(inst.cod(objs[a].second));
    for (std::size_t b = 0; b < objs.size(); ++b) {
      const Obj mb = inst.cod(objs[b].first);
      if (inst.cardinality(ma) != inst.cardinality(mb)) continue;
      for (const Mor& s : inst.hom(ma, mb)) {
        if (is_fibre_morphism(inst, s, objs[a], objs[b], tau, over_base)) {
          out.emplace_back(a, b, s);
        }
      }
    }
  }
  return out;
}

std::size_t components(std::size_t n, const MorphismList& ms) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t count = n;
  for (const auto& [a, b, s] : ms) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

std::vector<Factorisation> all_factorisations(const OperadicInstance& inst,
                                              const FinMap& f, bool op_second) {
  std::vector<Factorisation> out;
  for (Obj mid : inst.objects(inst.cardinality(inst.dom(f)))) {
    const std::vector<Mor> seconds = inst.hom(mid, inst.cod(f));
    for (const Mor& first : inst.hom(inst.dom(f), mid)) {
      for (const Mor& second : seconds) {
        if (op_second && !is_op_morphism(inst, second)) continue;
        if (inst.compose(second, first) == f) out.push_back({first, second});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FibreCategories fibre_categories(const OperadicInstance& inst, const FinMap& f) {
  FibreCategories fc{f, {}, {}, {}, {}, 0, 0};
  fc.c1 = all_factorisations(inst, f, false);
  fc.c2 = all_factorisations(inst, eta_of(inst, f), true);
  fc.c1_morphisms = morphisms_between(inst, fc.c1, false);
  fc.c2_morphisms = morphisms_between(inst, fc.c2, false);
  fc.c1_classes = components(fc.c1.size(), fc.c1_morphisms);
  fc.c1_classes_over_base =
      components(fc.c1.size(), morphisms_between(inst, fc.c1, true));
  return fc;
}

Factorisation functor_F(const OperadicInstance& inst, const Factorisation& y) {
  return {eta_rel(inst, y.first, y.second), eta_of(inst, y.second)};
}

Factorisation functor_G(const OperadicInstance& inst, const FinMap& f,
                        const Factorisation& x) {
  return {inst.compose(x.first, pi_of(inst, f)), x.second};
}

Report verify_decomposition_fibres(const OperadicInstance& inst, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  Report rep;
  rep.name = "decomposition fibres(" + inst.name() + ", bound " +
             std::to_string(bound) + ")";
  std::size_t literal_mismatch = 0;
  std::size_t maps = 0;
  for (Obj m : inst.objects(bound)) {
    for (Obj n : inst.objects(bound)) {
      for (const Mor& f : inst.hom(m, n)) {
        ++maps;
        const FibreCategories fc = fibre_categories(inst, f);
        const auto in_c1 = [&](const Factorisation& y) {
          return std::binary_search(fc.c1.begin(), fc.c1.end(), y);
        };
        const auto in_c2 = [&](const Factorisation& x) {
          return std::binary_search(fc.c2.begin(), fc.c2.end(), x);
        };
        for (const auto& [a, b, w] : fc.c2_morphisms) {
          rep.check(a == b && w == inst.identity(inst.dom(w)), [&] {
            return Violation{"C_2 discrete", {f, w}, fc.c2[a].str(), fc.c2[b].str()};
          });
        }
        for (const Factorisation& y : fc.c1) {
          const Factorisation fy = functor_F(inst, y);
          rep.check(in_c2(fy), [&] {
            return Violation{"F lands in C_2", {f, y.second, y.first}, fy.str(),
                             "object of C_2"};
          });
          const Mor u = pi_of(inst, y.second);
          const Factorisation gfy = functor_G(inst, f, fy);
          const Mor tau = inst.identity(inst.cod(y.second));
          const std::optional<Mor> inv = inst.inverse(u);
          const bool unit_ok =
              in_c1(gfy) && is_fibre_morphism(inst, u, y, gfy, tau, false) && inv &&
              is_fibre_morphism(inst, *inv, gfy, y, tau, false);
          rep.check(unit_ok, [&] {
            return Violation{"unit pi(f_2) is an invertible C_1 morphism",
                             {f, y.second, y.first, u}, y.str() + " -> " + gfy.str(),
                             "invertible morphism"};
          });
        }
        for (const Factorisation& x : fc.c2) {
          const Factorisation gx = functor_G(inst, f, x);
          const bool ok = in_c1(gx) && functor_F(inst, gx) == x;
          rep.check(ok, [&] {
            return Violation{"F G = id", {f, x.second, x.first}, gx.str(), x.str()};
          });
        }
        std::vector<std::size_t> endos(fc.c1.size(), 0);
        for (const auto& [a, b, s] : fc.c1_morphisms) {
          if (a == b) ++endos[a];
          const Factorisation fa = functor_F(inst, fc.c1[a]);
          const Factorisation fb = functor_F(inst, fc.c1[b]);
          const Mor w = omega(inst, s, inst.identity(inst.cod(fc.c1[a].second)),
                              fc.c1[a].second, fc.c1[b].second);
          rep.check(fa == fb && w == inst.identity(inst.dom(w)), [&] {
            return Violation{"F sends C_1 morphisms to identities",
                             {f, s, w}, fa.str(), fb.str()};
          });
        }
        for (std::size_t a = 0; a < fc.c1.size(); ++a) {
          rep.check(endos[a] == 1, [&] {
            return Violation{"C_1 automorphism group trivial", {f},
                             fc.c1[a].str(), std::to_string(endos[a]) + " automorphisms"};
          });
        }
        rep.check(fc.c1_classes == fc.c2.size(), [&] {
          return Violation{"|classes of C_1| = |C_2|", {f},
                           std::to_string(fc.c1_classes), std::to_string(fc.c2.size())};
        });
        if (fc.c1_classes_over_base != fc.c2.size()) ++literal_mismatch;
      }
    }
  }
  rep.notes.push_back("with C_1 morphisms fop over 1_{T_0} instead of 1_{T_1}, " +
                      std::to_string(literal_mismatch) + " of " +
                      std::to_string(maps) + " maps have |classes of C_1| != |C_2|");
  return rep;
}

}  // namespace pita
