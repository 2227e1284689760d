#include <gtest/gtest.h>

#include <map>

#include "mutants.hpp"
#include "pita/instances.hpp"

using namespace pita;

namespace {

using HomTable = std::map<std::pair<Obj, Obj>, std::vector<Mor>>;

HomTable hom_table(const OperadicInstance& inst, int bound) {
  HomTable h;
  for (Obj x : inst.objects(bound)) {
    for (Obj y : inst.objects(bound)) h[{x, y}] = inst.hom(x, y);
  }
  return h;
}

struct Counts {
  long diagrams = 0;
  long failures = 0;
};

// Column T -f-> S -g-> R mapped by sigma, omega, tau to T' -a-> S' -b-> R'.
// If omega and sigma are fop with respect to tau then sigma is fop with
// respect to omega. Diagrams whose conclusion holds need no further work.
Counts vertical_sweep(const OperadicInstance& inst, int bound) {
  const std::vector<Obj> objs = inst.objects(bound);
  HomTable h = hom_table(inst, bound);
  Counts out;
  struct Lower {
    Mor g, tau, b;
  };
  for (Obj s : objs) {
    for (Obj s2 : objs) {
      for (const Mor& omega : h[{s, s2}]) {
        std::vector<Lower> lower;
        for (Obj r : objs) {
          for (Obj r2 : objs) {
            for (const Mor& g : h[{s, r}]) {
              for (const Mor& tau : h[{r, r2}]) {
                for (const Mor& b : h[{s2, r2}]) {
                  if (inst.compose(b, omega) != inst.compose(tau, g)) continue;
                  if (is_fop_square(inst, omega, tau, g, b)) lower.push_back({g, tau, b});
                }
              }
            }
          }
        }
        for (Obj t : objs) {
          for (Obj t2 : objs) {
            for (const Mor& f : h[{t, s}]) {
              for (const Mor& sigma : h[{t, t2}]) {
                for (const Mor& a : h[{t2, s2}]) {
                  if (inst.compose(a, sigma) != inst.compose(omega, f)) continue;
                  out.diagrams += static_cast<long>(lower.size());
                  if (is_fop_square(inst, sigma, omega, f, a)) continue;
                  for (const Lower& q : lower) {
                    if (is_fop_square(inst, sigma, q.tau, inst.compose(q.g, f),
                                      inst.compose(q.b, a))) {
                      ++out.failures;
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

struct HorizontalCounts {
  long diagrams = 0;
  long cancel = 0;
  long extend = 0;
  long extend_injective = 0;
  long iff = 0;
};

// T -sigma-> T' -omega-> T'' over S -tau-> S' -lambda-> S'' with verticals
// a, b, c and the right square fop.
HorizontalCounts horizontal_sweep(const OperadicInstance& inst, int bound) {
  const std::vector<Obj> objs = inst.objects(bound);
  HomTable h = hom_table(inst, bound);
  HorizontalCounts out;
  struct Right {
    Mor omega, lambda, c;
    bool injective_fibres, lambda_onto, lambda_into, quasi;
  };
  for (Obj t2 : objs) {
    for (Obj s2 : objs) {
      for (const Mor& b : h[{t2, s2}]) {
        std::vector<Right> right;
        for (Obj t3 : objs) {
          for (Obj s3 : objs) {
            for (const Mor& omega : h[{t2, t3}]) {
              for (const Mor& lambda : h[{s2, s3}]) {
                for (const Mor& c : h[{t3, s3}]) {
                  if (inst.compose(c, omega) != inst.compose(lambda, b)) continue;
                  if (!is_fop_square(inst, omega, lambda, b, c)) continue;
                  bool inj = true;
                  for (int i = 1; i <= inst.cardinality(s3) && inj; ++i) {
                    inj = is_injective(
                        inst.cardinality(inst.fibre_morphism(omega, c, i)));
                  }
                  right.push_back(
                      {omega, lambda, c, inj,
                       is_surjective(inst.cardinality(lambda)),
                       is_injective(inst.cardinality(lambda)),
                       is_quasibijection(inst, omega) &&
                           is_quasibijection(inst, lambda)});
                }
              }
            }
          }
        }
        for (Obj t : objs) {
          for (Obj s : objs) {
            for (const Mor& sigma : h[{t, t2}]) {
              for (const Mor& tau : h[{s, s2}]) {
                for (const Mor& a : h[{t, s}]) {
                  if (inst.compose(b, sigma) != inst.compose(tau, a)) continue;
                  const bool left = is_fop_square(inst, sigma, tau, a, b);
                  const bool quasi_left =
                      is_quasibijection(inst, sigma) && is_quasibijection(inst, tau);
                  for (const Right& r : right) {
                    ++out.diagrams;
                    const bool composite = is_fop_square(
                        inst, inst.compose(r.omega, sigma),
                        inst.compose(r.lambda, tau), a, r.c);
                    if (composite && r.injective_fibres && !left) ++out.cancel;
                    if (left && r.lambda_onto && !composite) ++out.extend;
                    if (left && r.lambda_into && !composite) ++out.extend_injective;
                    if (quasi_left && r.quasi && composite != left) ++out.iff;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST(QuasibijectionTest, Examples) {
  const auto fin = make_fin();
  EXPECT_TRUE(is_quasibijection(*fin, FinMap::identity(3)));
  EXPECT_TRUE(is_quasibijection(*fin, FinMap(2, {2, 1})));
  EXPECT_FALSE(is_quasibijection(*fin, FinMap(1, {1, 1})));
}

TEST(QuasibijectionTest, AreExactlyBijectionsInFin) {
  const auto fin = make_fin();
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const FinMap& f : enumerate_maps(m, n)) {
        EXPECT_EQ(is_quasibijection(*fin, f), is_bijection(f)) << f;
      }
    }
  }
}

TEST(OpMorphismTest, Examples) {
  const auto fin = make_fin();
  EXPECT_TRUE(is_op_morphism(*fin, FinMap::terminal(4)));
  EXPECT_TRUE(is_op_morphism(*fin, FinMap::identity(4)));
  EXPECT_FALSE(is_op_morphism(*fin, FinMap(2, {2, 1})));
}

TEST(FopSquareTest, PitaSquareIsFop) {
  const auto fin = make_fin();
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const FinMap& f : enumerate_maps(m, n)) {
        const PitaPair p = pita::pita(f);
        EXPECT_TRUE(is_fop_square(*fin, p.pi, FinMap::identity(n), f, p.eta)) << f;
      }
    }
  }
}

TEST(FopSquareTest, IdentityOnTheRightIsFop) {
  const auto fin = make_fin();
  for (int t = 0; t <= 3; ++t) {
    for (int s = 0; s <= 3; ++s) {
      for (int s2 = 0; s2 <= 3; ++s2) {
        for (const FinMap& f : enumerate_maps(t, s)) {
          for (const FinMap& tau : enumerate_maps(s, s2)) {
            EXPECT_TRUE(is_fop_square(*fin, tau * f, tau, f, FinMap::identity(s2)));
          }
        }
      }
    }
  }
}

TEST(FopSquareTest, TransposedFibreIsNotFop) {
  const auto fin = make_fin();
  const FinMap f(1, {1, 1});
  EXPECT_FALSE(is_fop_square(*fin, FinMap(2, {2, 1}), FinMap::identity(1), f, f));
}

TEST(FopSquareTest, NonCommutingSquareThrows) {
  const auto fin = make_fin();
  const FinMap f(2, {1, 2});
  EXPECT_THROW(is_fop_square(*fin, FinMap(2, {2, 1}), FinMap::identity(2), f, f),
               ShapeError);
  EXPECT_THROW(is_fop_square(*fin, FinMap::identity(3), FinMap::identity(2), f, f),
               ShapeError);
}

TEST(VerticalFopTest, FinSurjBound4) {
  const Counts c = vertical_sweep(*make_fin_surj(), 4);
  EXPECT_GT(c.diagrams, 0);
  EXPECT_EQ(c.failures, 0);
}

TEST(VerticalFopTest, FinBound3) {
  const Counts c = vertical_sweep(*make_fin(), 3);
  EXPECT_GT(c.diagrams, 0);
  EXPECT_EQ(c.failures, 0);
}

// Surjectivity of lambda does not let the composite inherit fop from the
// left square; injectivity does.
TEST(HorizontalFopTest, FinSurjBound3) {
  const HorizontalCounts c = horizontal_sweep(*make_fin_surj(), 3);
  EXPECT_GT(c.diagrams, 0);
  EXPECT_EQ(c.cancel, 0);
  EXPECT_GT(c.extend, 0);
  EXPECT_EQ(c.extend_injective, 0);
  EXPECT_EQ(c.iff, 0);
}

TEST(HorizontalFopTest, FinBound3) {
  const HorizontalCounts c = horizontal_sweep(*make_fin(), 3);
  EXPECT_GT(c.diagrams, 0);
  EXPECT_EQ(c.cancel, 0);
  EXPECT_GT(c.extend, 0);
  EXPECT_EQ(c.extend_injective, 0);
  EXPECT_EQ(c.iff, 0);
}

TEST(HorizontalFopTest, SurjectiveLambdaCanMergeFibres) {
  // The fibres {1} and {2} of b merge over the single point of S''.
  const auto fin = make_fin();
  const FinMap sigma(2, {2, 1});
  const FinMap tau = FinMap::identity(2);
  const FinMap a = FinMap::identity(2);
  const FinMap b(2, {2, 1});
  const FinMap omega = FinMap::identity(2);
  const FinMap lambda(1, {1, 1});
  const FinMap c(1, {1, 1});
  ASSERT_TRUE(is_fop_square(*fin, sigma, tau, a, b));
  ASSERT_TRUE(is_fop_square(*fin, omega, lambda, b, c));
  ASSERT_TRUE(is_surjective(lambda));
  EXPECT_FALSE(is_fop_square(*fin, omega * sigma, lambda * tau, a, c));
}

TEST(HorizontalFopTest, CancellationNeedsInjectiveFibres) {
  // omega collapses the fibre of c over 1, so the composite forgets sigma.
  const auto fin = make_fin();
  const FinMap sigma(2, {2, 1});
  const FinMap a(1, {1, 1});
  const FinMap b(1, {1, 1});
  const FinMap tau = FinMap::identity(1);
  ASSERT_FALSE(is_fop_square(*fin, sigma, tau, a, b));
  const FinMap omega = FinMap::terminal(2);
  const FinMap lambda(2, {1});
  const FinMap c(2, {1});
  ASSERT_TRUE(is_fop_square(*fin, omega, lambda, b, c));
  EXPECT_TRUE(is_fop_square(*fin, omega * sigma, lambda * tau, a, c));
}

TEST(AxiomsTest, FinBound3) {
  const Report r = verify_axioms(*make_fin(), 3);
  EXPECT_TRUE(r.ok()) << render_table(r);
  EXPECT_GT(r.checked, 0u);
}

TEST(AxiomsTest, FinSurjBound4) {
  const Report r = verify_axioms(*make_fin_surj(), 4);
  EXPECT_TRUE(r.ok()) << render_table(r);
}

TEST(AxiomsTest, OrderPreservingBound4) {
  const Report r = verify_axioms(*make_op(), 4);
  EXPECT_TRUE(r.ok()) << render_table(r);
}

TEST(AxiomsTest, BoundMustBePositive) {
  EXPECT_THROW(verify_axioms(*make_fin(), 0), std::invalid_argument);
}

namespace {

void expect_caught(const OperadicInstance& inst, const std::string& family) {
  const Report r = verify_axioms(inst, 3, {.limit = 1});
  ASSERT_FALSE(r.ok()) << inst.name();
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_FALSE(r.violations.front().witnesses.empty());
  EXPECT_NE(r.violations.front().check.find(family), std::string::npos)
      << r.violations.front().check;
}

}  // namespace

TEST(AxiomMutationTest, FibreObject) {
  expect_caught(mutants::WrongFibreObject(), "A4");
}

TEST(AxiomMutationTest, FibreMap) {
  expect_caught(mutants::WrongFibreMap(), "D3");
}

TEST(AxiomMutationTest, ChosenTerminal) {
  expect_caught(mutants::WrongTerminal(), "D1");
}

TEST(AxiomMutationTest, WitnessesNameTheCorruptedInput) {
  const Report r = verify_axioms(mutants::WrongFibreMap(), 3);
  ASSERT_FALSE(r.ok());
  bool named = false;
  for (const Violation& v : r.violations) {
    for (const FinMap& w : v.witnesses) named = named || w == FinMap(1, {1, 1});
  }
  EXPECT_TRUE(named);
}
