#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "logchern/groebner.hpp"
#include "logchern/modules.hpp"

using namespace logchern;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly cst(std::size_t n, long c) { return MultiPoly::constant(n, c); }

std::vector<MultiPoly> basis_polys(const GroebnerBasis& gb) {
  std::vector<MultiPoly> out;
  for (const auto& e : gb.elements()) out.push_back(e.components.front());
  return out;
}

GradedModulePresentation quotient_ring(std::size_t n, std::vector<MultiPoly> ideal) {
  GradedModulePresentation m{GradedFreeModule::free(n, 1), {}};
  for (auto& p : ideal) m.relations.push_back(FreeModuleElement::from_poly(p));
  return m;
}

// Pairs each syzygy with the generators.
bool pairs_to_zero(const std::vector<FreeModuleElement>& syz, const std::vector<FreeModuleElement>& gens,
                   const GradedFreeModule& f) {
  for (const auto& s : syz) {
    if (!linear_combination(f, gens, s.components).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(GroebnerBasis, CoordinateIdeal) {
  auto x = var(2, 0), y = var(2, 1);
  std::vector<MultiPoly> gens{y, x};
  auto gb = groebner_basis(gens);
  EXPECT_EQ(basis_polys(gb), (std::vector<MultiPoly>{y, x}));  // ascending: y < x
}

TEST(GroebnerBasis, ContainmentCollapses) {
  auto x = var(2, 0);
  std::vector<MultiPoly> gens{x * x, x};
  EXPECT_EQ(basis_polys(groebner_basis(gens)), (std::vector<MultiPoly>{x}));
}

TEST(GroebnerBasis, SumAndDifference) {
  // Hand reduction: (x+y) - (x-y) = 2y, then x = (x+y) - y.
  auto x = var(2, 0), y = var(2, 1);
  std::vector<MultiPoly> gens{x + y, x - y};
  EXPECT_EQ(basis_polys(groebner_basis(gens)), (std::vector<MultiPoly>{y, x}));
}

TEST(GroebnerBasis, EmptyInput) {
  std::vector<MultiPoly> none;
  EXPECT_TRUE(groebner_basis(none).empty());
}

TEST(GroebnerBasis, CyclicThreeLex) {
  auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  std::vector<MultiPoly> gens{x + y + z, x * y + y * z + z * x, x * y * z - cst(3, 1)};
  auto gb = groebner_basis(gens, MonomialOrderKind::kLex);
  // Known lex basis: z^3 - 1, y^2 + y z + z^2, x + y + z.
  std::vector<std::string> got;
  for (const auto& p : basis_polys(gb)) got.push_back(p.to_string());
  std::vector<std::string> want{"z^3 - 1", "y^2 + y*z + z^2", "x + y + z"};
  EXPECT_EQ(got, want);
}

TEST(NormalForm, Basics) {
  auto x = var(2, 0), y = var(2, 1);
  std::vector<MultiPoly> gx{x};
  auto gb = groebner_basis(gx);
  EXPECT_TRUE(normal_form(x * x, gb).is_zero());
  EXPECT_EQ(normal_form(y, gb), y);
}

TEST(NormalForm, SubstitutionOracle) {
  // Reduction modulo (x+y) agrees with evaluation at x = -y.
  auto x = var(2, 0), y = var(2, 1);
  std::vector<MultiPoly> g{x + y};
  auto gb = groebner_basis(g);
  auto p = x * x + x * y + y * y;
  auto nf = normal_form(p, gb);
  std::vector<MultiPoly> sub{-y, y};
  EXPECT_EQ(nf, p.compose(sub));
  EXPECT_EQ(nf, y * y);
}

TEST(NormalForm, GeneratorsReduceToZero) {
  std::mt19937 rng(21);
  auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  std::vector<MultiPoly> gens{x * x - y * z, x * y - z * z, y * y * x - z * z * z + x * y * z};
  auto gb = groebner_basis(gens);
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
}

TEST(GroebnerBasis, ReducedBasisIsIndependentOfGeneratorOrder) {
  auto x = var(4, 0), y = var(4, 1), z = var(4, 2), w = var(4, 3);
  std::vector<MultiPoly> gens{x * y - z * w, x * x - y * w + z * z, y * z * w - x * x * x, x * z - w * w};
  auto reference = basis_polys(groebner_basis(gens));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(basis_polys(groebner_basis(gens)), reference);
  }
}

TEST(GroebnerBasis, ModuleBasisIndependentOfGeneratorOrder) {
  const std::size_t n = 3;
  auto x = var(n, 0), y = var(n, 1), z = var(n, 2);
  GradedFreeModule f = GradedFreeModule::free(n, 2);
  std::vector<FreeModuleElement> gens{{{x, y}}, {{y * z, x * x}}, {{z, x - y}}, {{x * z, y * y}}};
  // Make homogeneous: second and fourth are degree 2, first and third degree 1.
  auto reference = groebner_basis(f, gens).elements();
  std::mt19937 rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(groebner_basis(f, gens).elements(), reference);
  }
}

TEST(Syzygies, Koszul) {
  auto x = var(2, 0), y = var(2, 1);
  std::vector<MultiPoly> g{x, y};
  auto gb = groebner_basis(g);
  auto syz = syzygies(gb);
  ASSERT_EQ(syz.size(), 1u);
  EXPECT_TRUE(pairs_to_zero(syz, gb.elements(), gb.module()));
  // Up to sign, (x, -y) against the ordered basis (y, x).
  auto s = syz.front();
  EXPECT_TRUE((s.components[0] == x && s.components[1] == -y) || (s.components[0] == -x && s.components[1] == y));
}

TEST(Syzygies, FreeBasisHasNone) {
  GradedFreeModule f = GradedFreeModule::free(3, 2);
  std::vector<FreeModuleElement> gens{FreeModuleElement::unit(f, 0), FreeModuleElement::unit(f, 1)};
  EXPECT_TRUE(syzygies(groebner_basis(f, gens)).empty());
}

TEST(Syzygies, JacobianOfBooleanPair) {
  // Partials of xy are (y, x); the syzygy is (x, -y).
  auto x = var(2, 0), y = var(2, 1);
  GradedFreeModule target = GradedFreeModule::free(2, 1);
  GradedFreeModule source{2, {1, 1}};
  std::vector<FreeModuleElement> cols{FreeModuleElement::from_poly(y), FreeModuleElement::from_poly(x)};
  auto k = kernel(source, target, cols);
  ASSERT_EQ(k.size(), 1u);
  auto s = k.front();
  EXPECT_TRUE((s.components[0] == x && s.components[1] == -y) || (s.components[0] == -x && s.components[1] == y));
}

TEST(Kernel, ZeroColumnsAreInKernel) {
  auto x = var(2, 0);
  GradedFreeModule target = GradedFreeModule::free(2, 1);
  GradedFreeModule source{2, {1, 3}};
  std::vector<FreeModuleElement> cols{FreeModuleElement::from_poly(x), FreeModuleElement::from_poly(MultiPoly(2))};
  auto k = kernel(source, target, cols);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k.front(), FreeModuleElement::unit(source, 1));
}

TEST(MinimalGenerators, DropsRedundant) {
  auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  GradedFreeModule f = GradedFreeModule::free(3, 1);
  std::vector<FreeModuleElement> gens{FreeModuleElement::from_poly(x * y), FreeModuleElement::from_poly(x),
                                      FreeModuleElement::from_poly(y), FreeModuleElement::from_poly(x * z + y * z)};
  auto idx = minimal_generator_indices(f, gens);
  EXPECT_EQ(idx, (std::vector<std::size_t>{1, 2}));
}

TEST(Resolution, KoszulOnTwoVariables) {
  auto m = quotient_ring(2, {var(2, 0), var(2, 1)});
  auto r = free_resolution(m);
  ASSERT_EQ(r.terms.size(), 3u);
  EXPECT_EQ(r.twist_multiset(0), (std::map<int, int>{{0, 1}}));
  EXPECT_EQ(r.twist_multiset(1), (std::map<int, int>{{-1, 2}}));
  EXPECT_EQ(r.twist_multiset(2), (std::map<int, int>{{-2, 1}}));
  EXPECT_TRUE(maps_compose_to_zero(r));
}

TEST(Resolution, FreeModuleHasLengthZero) {
  auto m = GradedModulePresentation::free(GradedFreeModule{3, {0, 1, 1}});
  auto r = free_resolution(m);
  EXPECT_EQ(r.length(), 0u);
  EXPECT_EQ(r.terms.size(), 1u);
}

TEST(Resolution, PruneRemovesUnitRelations) {
  // S^2 / <(1, x), (0, y)> is S / (x y)-free?  (e0 = -x e1) leaves S/(y).
  auto x = var(2, 0), y = var(2, 1);
  GradedModulePresentation m{GradedFreeModule{2, {1, 0}}, {{{cst(2, 1), x}}, {{MultiPoly(2), y}}}};
  auto r = free_resolution(m);
  EXPECT_EQ(r.twist_multiset(0), (std::map<int, int>{{0, 1}}));
  EXPECT_EQ(r.twist_multiset(1), (std::map<int, int>{{-1, 1}}));
  EXPECT_EQ(r.length(), 1u);
}

TEST(Resolution, TwistedCubicIsMinimalAndExact) {
  // Ideal of the twisted cubic: resolution S <- S(-2)^3 <- S(-3)^2.
  auto x = var(4, 0), y = var(4, 1), z = var(4, 2), w = var(4, 3);
  auto m = quotient_ring(4, {x * z - y * y, x * w - y * z, y * w - z * z});
  auto r = free_resolution(m);
  ASSERT_EQ(r.terms.size(), 3u);
  EXPECT_EQ(r.twist_multiset(1), (std::map<int, int>{{-2, 3}}));
  EXPECT_EQ(r.twist_multiset(2), (std::map<int, int>{{-3, 2}}));
  EXPECT_TRUE(maps_compose_to_zero(r));
  // Minimal: no entry with a nonzero constant term.
  for (const auto& map : r.maps)
    for (const auto& col : map)
      for (const auto& c : col.components) EXPECT_TRUE(c.is_zero() || c.degree() > 0);
  // Hilbert polynomial 3t + 1.
  EXPECT_EQ(hilbert_polynomial(m), (UniPolyQ{1, 3}));
}

TEST(Hilbert, FunctionBasics) {
  EXPECT_EQ(hilbert_function(GradedModulePresentation::free(GradedFreeModule::free(4, 1)), 2), 10);
  EXPECT_EQ(hilbert_function(GradedModulePresentation::free(GradedFreeModule{4, {1}}), 1), 1);
  auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  auto m = quotient_ring(3, {x, y, z * z});
  EXPECT_EQ(finite_length(m), 2);
}

TEST(Hilbert, PolynomialOfTwistedFree) {
  auto m = GradedModulePresentation::free(GradedFreeModule{4, {1}});
  EXPECT_EQ(hilbert_polynomial(m), (UniPolyQ{0, Rational(1, 3), Rational(1, 2), Rational(1, 6)}));
}

TEST(Hilbert, PolynomialAgreesWithFunctionInLargeDegree) {
  auto x = var(4, 0), y = var(4, 1), z = var(4, 2), w = var(4, 3);
  auto m = quotient_ring(4, {x * y, y * z * w - x * x * x, z * z * w});
  auto hp = hilbert_polynomial(m);
  auto r = free_resolution(m);
  int reg = 0;
  for (const auto& t : r.terms)
    for (int a : t.twists) reg = std::max(reg, a);
  HilbertData h(m);
  for (int d = reg; d < reg + 5; ++d) EXPECT_EQ(hp(d), Rational(h.function(d))) << "degree " << d;
}

TEST(Hilbert, KrullDimension) {
  auto x = var(4, 0), y = var(4, 1), z = var(4, 2), w = var(4, 3);
  EXPECT_EQ(krull_dim(GradedModulePresentation::free(GradedFreeModule::free(4, 1))), 4);
  EXPECT_EQ(krull_dim(quotient_ring(4, {x, y, z, w})), 0);
  EXPECT_EQ(krull_dim(quotient_ring(4, {cst(4, 1)})), -1);
  EXPECT_EQ(krull_dim(quotient_ring(4, {x * y, z})), 2);
}

TEST(Hilbert, FiniteLength) {
  auto x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(finite_length(quotient_ring(2, {x, y})), 1);
  EXPECT_EQ(finite_length(quotient_ring(2, {x * x, y})), 2);
  EXPECT_THROW(finite_length(quotient_ring(2, {x})), std::domain_error);
  EXPECT_EQ(finite_length(quotient_ring(2, {cst(2, 1)})), 0);
}

TEST(Dual, FreeModuleFlipsTwists) {
  auto m = GradedModulePresentation::free(GradedFreeModule{3, {1, 1, 1}});
  auto d = module_dual(m);
  EXPECT_EQ(d.target.twists, (std::vector<int>{-1, -1, -1}));
  EXPECT_TRUE(d.relations.empty());
}

TEST(Ext1, FreeModuleGivesZero) {
  auto m = GradedModulePresentation::free(GradedFreeModule{3, {0, 2}});
  auto e = ext1_against_ring(m);
  EXPECT_EQ(krull_dim(e), -1);
  EXPECT_EQ(hilbert_polynomial(e), UniPolyQ());
}

TEST(Ext1, MaximalIdealOfThePlane) {
  // m = (x, y) as a submodule of S; Ext^1(m, S) = Ext^2(S/m, S) = k(2).
  auto x = var(2, 0), y = var(2, 1);
  GradedFreeModule s = GradedFreeModule::free(2, 1);
  std::vector<FreeModuleElement> gens{FreeModuleElement::from_poly(x), FreeModuleElement::from_poly(y)};
  auto ideal = presentation_of_submodule(s, gens);
  auto e = ext1_against_ring(ideal);
  EXPECT_EQ(finite_length(e), 1);
  auto h = hilbert_function_range(e, -4, 2);
  EXPECT_EQ(h, (std::vector<long>{0, 0, 1, 0, 0, 0, 0}));  // concentrated in degree -2
}

TEST(Resolution, AlternatingHilbertSumsMatch) {
  auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  auto m = quotient_ring(3, {x * y, y * z, x * z, x * x - y * y});
  auto r = free_resolution(m);
  EXPECT_TRUE(maps_compose_to_zero(r));
  HilbertData h(m);
  for (int d = 0; d <= 10; ++d) {
    long alt = 0;
    for (std::size_t i = 0; i < r.terms.size(); ++i)
      alt += (i % 2 ? -1 : 1) * hilbert_function(r.terms[i], d);
    EXPECT_EQ(alt, h.function(d)) << d;
  }
}

TEST(Resolution, PaddingKeepsComplexExact) {
  auto x = var(2, 0), y = var(2, 1);
  auto r = free_resolution(quotient_ring(2, {x, y}));
  auto p = pad_resolution(r, 1, 3);
  EXPECT_TRUE(maps_compose_to_zero(p));
  EXPECT_EQ(p.terms[1].rank(), 3u);
  EXPECT_EQ(p.terms[2].rank(), 2u);
}
