#include <gtest/gtest.h>

#include "gorlab/algebra.hpp"
#include "gorlab/module.hpp"

using namespace gorlab;

namespace {
Fq f3 = Fq::zero(3);
Fq f2 = Fq::zero(2);

AlgebraPtr<Fq> make(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                    const Fq& ex = f3) {
  return algebra_from_monomial_strings(vars, gens, ex);
}
}  // namespace

TEST(Monomial, ParseAndPrint) {
  std::vector<std::string> vars{"x", "y"};
  EXPECT_EQ(parse_monomial(vars, "x^2*y"), (Monomial{2, 1}));
  EXPECT_EQ(parse_monomial(vars, "1"), (Monomial{0, 0}));
  EXPECT_EQ(print_monomial(vars, {2, 1}), "x^2*y");
  EXPECT_EQ(print_monomial(vars, {0, 0}), "1");
  EXPECT_THROW(parse_monomial(vars, "z"), parse_error);
  EXPECT_THROW(parse_monomial(vars, "x^"), parse_error);
  EXPECT_THROW(parse_monomial(vars, "x^0"), parse_error);
}

TEST(Monomial, MinimalizeGens) {
  auto out = minimalize_monomial_gens({{2, 0}, {2, 1}, {0, 2}, {1, 1}});
  EXPECT_EQ(out, (std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}}));
}

TEST(MonomialQuotient, TruncatedPolynomialRing) {
  auto a = make({"x"}, {"x^3"});
  EXPECT_EQ(a->dim(), 3u);
  EXPECT_EQ(a->labels(), (std::vector<std::string>{"1", "x", "x^2"}));
  EXPECT_EQ(a->unit_index(), 0u);
  EXPECT_EQ(a->edim(), 1u);
}

TEST(MonomialQuotient, SquareOfMaximalIdealInTwoVariables) {
  auto a = make({"x", "y"}, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(a->dim(), 3u);
  EXPECT_EQ(a->edim(), 2u);
  EXPECT_EQ(a->max_ideal().dim(), 2u);
}

TEST(MonomialQuotient, CubeOfMaximalIdeal) {
  auto a = make({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"});
  EXPECT_EQ(a->dim(), 6u);
  EXPECT_EQ(a->labels()[0], "1");
  EXPECT_EQ(a->labels()[5], "y^2");
}

TEST(MonomialQuotient, RejectsNonArtinianAndUnit) {
  EXPECT_THROW(make({"x", "y"}, {"x^2"}), error);          // no pure power of y
  EXPECT_THROW(make({"x", "y"}, {"x*y"}), error);          // not zero-dimensional
  EXPECT_THROW(make({"x"}, {"1"}), error);                 // unit generator
  EXPECT_THROW(make({"x", "x"}, {"x^2"}), parse_error);    // duplicate var
  EXPECT_THROW(make({"2x"}, {"x^2"}), parse_error);        // bad var name
}

TEST(Algebra, ValidationCatchesBadTables) {
  // a two-element "algebra" with no unit row
  Fq ex = f2;
  std::vector<Matrix<Fq>> lmul(2, Matrix<Fq>(2, 2, ex));
  EXPECT_THROW(Algebra<Fq>(lmul, {"a", "b"}, ex), error);
  // non-nilpotent: e1 idempotent, basis {1, e} with e^2 = e
  std::vector<Matrix<Fq>> l2;
  Matrix<Fq> lu = Matrix<Fq>::identity(2, ex);
  Matrix<Fq> le(2, 2, ex);
  le.at(1, 0) = ex.one_like();
  le.at(1, 1) = ex.one_like();  // e*e = e
  l2 = {lu, le};
  EXPECT_THROW(Algebra<Fq>(l2, {"1", "e"}, ex), error);
}

TEST(Socle, Examples) {
  auto a1 = make({"x"}, {"x^3"});
  auto s1 = socle(regular_module(a1));
  EXPECT_EQ(s1.dim(), 1u);
  EXPECT_TRUE(s1.contains(unit_vector(3, 2, f3)));  // x^2

  // kernel-intersection oracle: over (x,y)^3 the socle is exactly the
  // degree-2 stratum
  auto a2 = make({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto s2 = socle(regular_module(a2));
  EXPECT_EQ(s2.dim(), 3u);
  for (std::size_t i : {3u, 4u, 5u}) EXPECT_TRUE(s2.contains(unit_vector(6, i, f3)));

  auto a3 = make({"x", "y"}, {"x^2", "y^2"});
  auto s3 = socle(regular_module(a3));
  EXPECT_EQ(s3.dim(), 1u);
  EXPECT_TRUE(s3.contains(unit_vector(4, 3, f3)));  // xy
}

TEST(CanonicalModule, DualityBasics) {
  auto a = make({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto w = canonical_module(a);
  EXPECT_EQ(w.dim, a->dim());
  validate_module(w, ModuleValidation::full);
  EXPECT_EQ(minimal_generator_count(w), 3u);  // = socle dim of R
  EXPECT_EQ(minimal_generator_count(w), socle(regular_module(a)).dim());

  auto a1 = make({"x"}, {"x^3"});
  auto iso = module_isomorphic(regular_module(a1), canonical_module(a1));
  EXPECT_EQ(iso.verdict, IsoVerdict::yes);
}

TEST(Hom, FreeSourceSimpleSourceAndEndomorphisms) {
  auto a = make({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto r = regular_module(a);
  auto w = canonical_module(a);
  auto k = simple_module(a);

  EXPECT_EQ(hom_module(r, w).dim(), w.dim);          // Hom(R, M) = M
  EXPECT_EQ(hom_module(k, r).dim(), socle(r).dim()); // Hom(k, R) = soc R
  EXPECT_EQ(hom_module(w, w).dim(), a->dim());       // End(omega) = R

  // evaluation accessor: identity of End(R) applied to x gives x
  auto h = hom_module(r, r);
  auto id_coords = h.solutions.coords(detail::vec_cm(Matrix<Fq>::identity(r.dim, f3)));
  ASSERT_TRUE(id_coords.has_value());
  auto x = unit_vector(r.dim, 1, f3);
  EXPECT_EQ(h.evaluate(*id_coords, x), x);
}

TEST(Annihilator, Examples) {
  auto a = make({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto r = regular_module(a);
  EXPECT_EQ(annihilator(r).dim(), 0u);
  EXPECT_EQ(annihilator(simple_module(a)), a->max_ideal());
}

TEST(QuotientAlgebra, Examples) {
  auto a = make({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"});
  // A / 0 = A
  auto a0 = quotient_algebra(a, Subspace<Fq>::zero(a->dim(), f3));
  EXPECT_EQ(a0->dim(), a->dim());
  EXPECT_EQ(a0->labels(), a->labels());

  // (x,y)^3 mod its socle is (x,y)^2
  auto q = quotient_algebra(a, socle(regular_module(a)));
  EXPECT_EQ(q->dim(), 3u);
  EXPECT_EQ(q->max_ideal().dim(), 2u);
  EXPECT_EQ(q->product_subspace(q->max_ideal(), q->max_ideal()).dim(), 0u);

  EXPECT_THROW(quotient_algebra(a, Subspace<Fq>::full(a->dim(), f3)), error);
}

TEST(QuotientAlgebra, SocleSliceGivesGorensteinQuotient) {
  auto a = make({"x", "y"}, {"x^2", "x*y", "y^3"});
  EXPECT_EQ(a->dim(), 4u);  // 1, x, y, y^2
  // span(a x + b y^2), a, b nonzero
  std::vector<Fq> v(4, f3);
  v[1] = f3.lift(1);
  v[3] = f3.lift(2);
  auto line = Subspace<Fq>::span_of({v}, 4, f3);
  auto q = quotient_algebra(a, line);
  EXPECT_EQ(q->dim(), 3u);
  EXPECT_EQ(socle(regular_module(q)).dim(), 1u);  // Gorenstein
}

TEST(QuotientAlgebra, RejectsNonIdeal) {
  auto a = make({"x"}, {"x^3"});
  // span(x) is not an ideal (x * x = x^2 escapes)
  auto line = Subspace<Fq>::span_of({unit_vector(3, 1, f3)}, 3, f3);
  EXPECT_THROW(quotient_algebra(a, line), error);
}

TEST(ExtendAlgebra, LiftsStructureConstants) {
  auto a = make({"x", "y"}, {"x^2", "x*y", "y^2"}, f2);
  auto a4 = extend_algebra(a, 2);
  EXPECT_EQ(a4->dim(), a->dim());
  EXPECT_EQ(a4->proto().order(), 4u);
  EXPECT_EQ(a4->edim(), a->edim());
  EXPECT_EQ(socle(regular_module(a4)).dim(), socle(regular_module(a)).dim());
}
