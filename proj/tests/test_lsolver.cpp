#include "pontcalc/l_solver.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pontcalc;

TEST_CASE("generator assignments") {
    GeneratorAssignment a;
    REQUIRE(a.c_for(2) == Rational(1));
    a.set(3, Rational(-5));
    REQUIRE(a.c_for(3) == Rational(-5));
    REQUIRE(a.c_for(4) == Rational(1));
    REQUIRE_THROWS_AS(a.set(3, Rational(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(a.set(1, Rational(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(GeneratorAssignment(Rational(0)), std::invalid_argument);
}

TEST_CASE("basis manifolds") {
    ManifoldModel sq = basis_manifold(Partition{1, 1}, {});
    REQUIRE(sq.signature == Rational(1));
    REQUIRE(sq.dim4 == 2);

    ManifoldModel x1 = basis_manifold(Partition{2}, {});
    REQUIRE(x1.signature == Rational(0));

    CharVector v = basis_char_vector(Partition{2, 1}, {}, CharBasis::P);
    REQUIRE(v.values.at(Partition{3}) == ParamPoly(-9));
    REQUIRE(v.values.at(Partition{2, 1}) == ParamPoly(-72));
    REQUIRE(v.values.at(Partition{1, 1, 1}) == ParamPoly(-189));
}

TEST_CASE("assemble the linear system") {
    auto [a1, b1] = assemble(1);
    REQUIRE(a1.rows() == 1);
    REQUIRE(a1.at(0, 0) == Rational(3));
    REQUIRE(b1 == std::vector<Rational>{Rational(1)});

    // canonical row/column order [(2), (1,1)]
    auto [a2, b2] = assemble(2);
    REQUIRE(a2.at(0, 0) == Rational(-3));
    REQUIRE(a2.at(0, 1) == Rational(-21));
    REQUIRE(a2.at(1, 0) == Rational(9));
    REQUIRE(a2.at(1, 1) == Rational(18));
    REQUIRE(b2 == std::vector<Rational>{Rational(0), Rational(1)});

    // the (1,...,1) row is the p-vector of (CP^2)^i
    for (int i = 2; i <= 4; ++i) {
        auto [a, b] = assemble(i);
        const auto parts = enumerate_partitions(i);
        CharVector cp_power = basis_char_vector(
            Partition(std::vector<int>(static_cast<std::size_t>(i), 1)), {}, CharBasis::P);
        std::size_t col = 0;
        for (const auto& [j, value] : cp_power.values)
            REQUIRE(a.at(parts.size() - 1, col++) == value.constant_value());
        REQUIRE(b.back() == Rational(1));
    }
}

TEST_CASE("solve_l reproduces the known coefficients") {
    LGenusResult l1 = solve_l(1);
    REQUIRE(l1.coeffs == std::map<Partition, Rational>{{Partition{1}, Rational(1, 3)}});

    LGenusResult l2 = solve_l(2);
    REQUIRE(l2.coeffs == std::map<Partition, Rational>{{Partition{2}, Rational(7, 45)},
                                                       {Partition{1, 1}, Rational(-1, 45)}});

    LGenusResult l3 = solve_l(3);
    REQUIRE(l3.coeffs ==
            std::map<Partition, Rational>{{Partition{3}, Rational(62, 945)},
                                          {Partition{2, 1}, Rational(-13, 945)},
                                          {Partition{1, 1, 1}, Rational(2, 945)}});
}

TEST_CASE("the system is nonsingular through i = 8") {
    for (int i = 1; i <= 8; ++i)
        REQUIRE_NOTHROW(solve_l(i));
}

TEST_CASE("independence of the bundle constants") {
    std::vector<GeneratorAssignment> assigns{GeneratorAssignment{Rational(1)},
                                             GeneratorAssignment{Rational(2)},
                                             GeneratorAssignment{Rational(-3)}};
    for (int i = 2; i <= 5; ++i)
        REQUIRE(verify_independence(i, assigns));

    GeneratorAssignment mixed;
    mixed.set(2, Rational(7, 3));
    mixed.set(3, Rational(-2));
    REQUIRE(verify_independence(3, {GeneratorAssignment{}, mixed}));
    REQUIRE(verify_independence(4, {GeneratorAssignment{Rational(1)},
                                    GeneratorAssignment{Rational(5)}}));

    REQUIRE_THROWS_AS(verify_independence(2, {GeneratorAssignment{}}),
                      std::invalid_argument);
}

TEST_CASE("classify_combo") {
    Combo l2{2, {{Partition{2}, Rational(7)}, {Partition{1, 1}, Rational(-1)}}};
    ClassifyResult r = classify_combo(l2);
    REQUIRE(r.is_multiple);
    REQUIRE(r.ratio == Rational(45));

    Combo p2{2, {{Partition{2}, Rational(1)}}};
    ClassifyResult w = classify_combo(p2);
    REQUIRE(!w.is_multiple);
    REQUIRE(w.witness == Partition{2});
    REQUIRE(w.value == ParamPoly::parameter("c1") * Rational(-3));

    Combo p1{1, {{Partition{1}, Rational(1)}}};
    ClassifyResult m1 = classify_combo(p1);
    REQUIRE(m1.is_multiple);
    REQUIRE(m1.ratio == Rational(3));

    Combo zero{2, {{Partition{2}, Rational(0)}}};
    REQUIRE_THROWS_AS(classify_combo(zero), std::invalid_argument);
    Combo bad_weight{2, {{Partition{3}, Rational(1)}}};
    REQUIRE_THROWS_AS(classify_combo(bad_weight), std::invalid_argument);
}

TEST_CASE("L_i itself classifies as ratio 1") {
    for (int i = 1; i <= 6; ++i) {
        LGenusResult l = solve_l(i);
        ClassifyResult r = classify_combo(Combo{i, l.coeffs});
        REQUIRE(r.is_multiple);
        REQUIRE(r.ratio == Rational(1));
    }
}

TEST_CASE("symbolic rows are homogeneous of degree = number of bundle factors") {
    for (int i = 2; i <= 5; ++i)
        for (const Partition& i_part : enumerate_partitions(i)) {
            int n = 0;
            for (int part : i_part.parts())
                if (part >= 2)
                    ++n;
            CharVector row = basis_char_vector_symbolic(i_part, "c", CharBasis::P);
            for (const auto& [j, value] : row.values)
                for (const auto& [mon, coeff] : value.terms())
                    REQUIRE(monomial_degree(mon) == static_cast<unsigned>(n));
        }
}
