#include "pontcalc/rat_matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pontcalc;

namespace {

/// Random invertible matrix as a product of unit-lower and upper triangular
/// factors with nonzero diagonal.
RatMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> diag(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    RatMatrix l(n, n), u(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        l.at(r, r) = Rational(1);
        u.at(r, r) = Rational((sign(rng) ? 1 : -1) * diag(rng), diag(rng));
        for (std::size_t c = 0; c < r; ++c)
            l.at(r, c) = Rational(entry(rng), 1 + diag(rng));
        for (std::size_t c = r + 1; c < n; ++c)
            u.at(r, c) = Rational(entry(rng));
    }
    RatMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k)
                a.at(r, c) += l.at(r, k) * u.at(k, c);
    return a;
}

} // namespace

TEST_CASE("identity and diagonal") {
    RatMatrix id(2, 2);
    id.at(0, 0) = id.at(1, 1) = Rational(1);
    auto x = linear_solve(id, {Rational(5, 3), Rational(-2)});
    REQUIRE(x == std::vector<Rational>{Rational(5, 3), Rational(-2)});

    RatMatrix d(2, 2);
    d.at(0, 0) = d.at(1, 1) = Rational(2);
    REQUIRE(linear_solve(d, {Rational(1), Rational(1)}) ==
            std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("2x2 system from the dimension-8 determination") {
    // -21x - 3y = 0, 18x + 9y = 1 has the unique solution (-1/45, 7/45).
    RatMatrix a(2, 2);
    a.at(0, 0) = Rational(-21);
    a.at(0, 1) = Rational(-3);
    a.at(1, 0) = Rational(18);
    a.at(1, 1) = Rational(9);
    auto x = linear_solve(a, {Rational(0), Rational(1)});
    REQUIRE(x == std::vector<Rational>{Rational(-1, 45), Rational(7, 45)});
}

TEST_CASE("solve then multiply reproduces the rhs exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 12u, 25u, 50u}) {
        RatMatrix a = random_invertible(n, rng);
        std::vector<Rational> b(n);
        for (auto& v : b)
            v = Rational(entry(rng), 1 + std::abs(entry(rng)));
        std::vector<Rational> x = linear_solve(a, b);
        REQUIRE(a.mul_vector(x) == b);
    }
}

TEST_CASE("singular and malformed inputs") {
    RatMatrix s(2, 2);
    s.at(0, 0) = Rational(1);
    s.at(0, 1) = Rational(2);
    s.at(1, 0) = Rational(2);
    s.at(1, 1) = Rational(4);
    REQUIRE_THROWS_AS(linear_solve(s, {Rational(1), Rational(1)}), SingularMatrixError);

    RatMatrix z(2, 2);
    REQUIRE_THROWS_AS(linear_solve(z, {Rational(0), Rational(0)}), SingularMatrixError);

    RatMatrix rect(2, 3);
    REQUIRE_THROWS_AS(linear_solve(rect, {Rational(0), Rational(0)}),
                      std::invalid_argument);
    RatMatrix ok(2, 2);
    ok.at(0, 0) = ok.at(1, 1) = Rational(1);
    REQUIRE_THROWS_AS(linear_solve(ok, {Rational(0)}), std::invalid_argument);
}
