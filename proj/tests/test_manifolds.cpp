#include "pontcalc/manifolds.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pontcalc;

namespace {

const ParamPoly c = ParamPoly::parameter("c");

ClassElement p_component(const ManifoldModel& m, int j) {
    return m.ring.component(m.total_p, 4 * j);
}

} // namespace

TEST_CASE("complex projective spaces") {
    ManifoldModel cp2 = complex_projective_even(1);
    REQUIRE(cp2.dim4 == 1);
    REQUIRE(cp2.signature == Rational(1));
    REQUIRE(cp2.ring.component(cp2.total_p, 0) == cp2.ring.unit());

    ClassElement a = cp2.ring.generator_element("a");
    ClassElement a2 = cp2.ring.mul(a, a);
    REQUIRE(p_component(cp2, 1) == a2 * ParamPoly(3));
    REQUIRE(p_component(cp2, 2).is_zero()); // truncated above dimension 4
    REQUIRE(cp2.ring.top_evaluate(p_component(cp2, 1)) == ParamPoly(3));

    ManifoldModel cp4 = complex_projective_even(2);
    ClassElement b2 = cp4.ring.mul(cp4.ring.generator_element("a"),
                                   cp4.ring.generator_element("a"));
    REQUIRE(p_component(cp4, 1) == b2 * ParamPoly(5));
    REQUIRE(p_component(cp4, 2) == cp4.ring.mul(b2, b2) * ParamPoly(10));
    REQUIRE(cp4.ring.top_evaluate(p_component(cp4, 2)) == ParamPoly(10));
    REQUIRE(cp4.ring.top_evaluate(
                cp4.ring.mul(p_component(cp4, 1), p_component(cp4, 1))) == ParamPoly(25));

    REQUIRE_THROWS_AS(complex_projective_even(0), std::invalid_argument);
}

TEST_CASE("Pontryagin classes of the projective bundles") {
    for (int k = 1; k <= 6; ++k) {
        ManifoldModel xc = projective_bundle(k, c);
        REQUIRE(xc.dim4 == k + 1);
        REQUIRE(xc.signature == Rational(0));
        const RingModel& R = xc.ring;
        ClassElement y2 = R.pow(R.generator_element("y"), 2);
        ClassElement x = R.generator_element("x");

        // p_1 = (2k+1) y^2 - 2cx
        REQUIRE(p_component(xc, 1) == y2 * ParamPoly(2 * k + 1) - x * (ParamPoly(2) * c));
        // p_2 = k(2k+1) y^4 - 4c(k-1) x y^2, stated before reduction; compare
        // normal forms.
        ClassElement p2_expected =
            R.reduce(R.pow(y2, 2) * ParamPoly(k * (2 * k + 1)) -
                     R.mul(x, y2) * (c * Rational(4 * (k - 1))));
        REQUIRE(p_component(xc, 2) == p2_expected);
        // p_{k+1} = binom(2k+1, k+1) y^{2k+2}
        ClassElement top_expected =
            R.pow(y2, static_cast<unsigned>(k + 1)) * ParamPoly(Rational(binomial(2 * k + 1, k + 1)));
        REQUIRE(p_component(xc, k + 1) == R.reduce(top_expected));
    }
    REQUIRE_THROWS_AS(projective_bundle(0, c), std::invalid_argument);
}

TEST_CASE("total Pontryagin class truncates above the dimension") {
    for (int k = 1; k <= 8; ++k) {
        ManifoldModel xc = projective_bundle(k, c);
        for (const auto& [mon, coeff] : xc.total_p.terms())
            REQUIRE(xc.ring.degree_of(mon) <= 4 * (k + 1));
        REQUIRE(xc.ring.component(xc.total_p, 0) == xc.ring.unit());
    }
}

TEST_CASE("Chern-to-Pontryagin reproduces the bundle's total class") {
    for (int k = 1; k <= 8; ++k) {
        ManifoldModel xc = projective_bundle(k, c);
        const RingModel& R = xc.ring;
        ClassElement y = R.generator_element("y");
        ClassElement x = R.generator_element("x");
        ClassElement one_plus_y = R.unit() + y;
        // c(T pi) = (1+y)^{2k+1} + c x (1+y)^{2k-1}
        ClassElement chern = R.pow(one_plus_y, static_cast<unsigned>(2 * k + 1)) +
                             R.mul(x, R.pow(one_plus_y, static_cast<unsigned>(2 * k - 1))) * c;
        REQUIRE(chern_to_pontryagin(chern, R) == xc.total_p);
    }
}

TEST_CASE("Chern-to-Pontryagin degenerate cases") {
    ManifoldModel cp4 = complex_projective_even(2);
    const RingModel& R = cp4.ring;
    REQUIRE(chern_to_pontryagin(R.unit(), R) == R.unit());

    // line bundle: p(L) = 1 + c_1^2
    ClassElement a = R.generator_element("a");
    REQUIRE(chern_to_pontryagin(R.unit() + a, R) == R.unit() + R.mul(a, a));

    REQUIRE_THROWS_AS(chern_to_pontryagin(a, R), std::invalid_argument);
}

TEST_CASE("products") {
    ManifoldModel cp2 = complex_projective_even(1);
    ManifoldModel sq = product(cp2, cp2);
    REQUIRE(sq.dim4 == 2);
    REQUIRE(sq.signature == Rational(1));
    // p_1 = 3a^2 + 3b^2 in the tensor ring
    ClassElement expected = sq.ring.pow(sq.ring.generator_element("a"), 2) * ParamPoly(3) +
                            sq.ring.pow(sq.ring.generator_element("a2"), 2) * ParamPoly(3);
    REQUIRE(sq.ring.component(sq.total_p, 4) == expected);

    ManifoldModel mixed = product(cp2, projective_bundle(1, c));
    REQUIRE(mixed.signature == Rational(0));
    REQUIRE(mixed.dim4 == 3);
    REQUIRE(mixed.params == std::set<std::string>{"c"});

    ManifoldModel with_pt = product(cp2, point_manifold());
    REQUIRE(with_pt.dim4 == cp2.dim4);
    REQUIRE(with_pt.signature == cp2.signature);
    REQUIRE(with_pt.total_p == cp2.total_p);
    REQUIRE(with_pt.name == cp2.name);
}

TEST_CASE("orientation normalization") {
    // <x y^{2k}, [X_c]> = +1 fixes every downstream sign.
    for (int k = 1; k <= 3; ++k) {
        ManifoldModel xc = projective_bundle(k, c);
        ClassElement orient = xc.ring.mul(
            xc.ring.generator_element("x"),
            xc.ring.pow(xc.ring.generator_element("y"), static_cast<unsigned>(2 * k)));
        REQUIRE(xc.ring.top_evaluate(orient) == ParamPoly(1));
    }
}
