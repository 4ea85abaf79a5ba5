#include "pontcalc/symmetric_functions.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

using namespace pontcalc;

namespace {

// Test-only oracle: explicit polynomials in N variables as exponent-vector
// maps, independent of the combinatorial transition machinery.
using Poly = std::map<std::vector<int>, Rational>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t n) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(n);
            for (std::size_t i = 0; i < n; ++i)
                m[i] = ma[i] + mb[i];
            auto [it, inserted] = r.emplace(std::move(m), ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

/// e_r(x_1..x_n): all 0/1 exponent vectors with r ones.
Poly elementary_poly(int r, std::size_t n) {
    Poly p;
    std::vector<int> mon(n, 0);
    auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
        if (left == 0) {
            p[mon] = Rational(1);
            return;
        }
        if (idx >= n || static_cast<int>(n - idx) < left)
            return;
        mon[idx] = 1;
        self(self, idx + 1, left - 1);
        mon[idx] = 0;
        self(self, idx + 1, left);
    };
    rec(rec, 0, r);
    return p;
}

/// m_lambda(x_1..x_n): all distinct arrangements of the parts.
Poly monomial_poly(const Partition& lambda, std::size_t n) {
    std::vector<int> mon(lambda.parts());
    mon.resize(n, 0);
    std::sort(mon.begin(), mon.end());
    Poly p;
    do {
        p[mon] = Rational(1);
    } while (std::next_permutation(mon.begin(), mon.end()));
    return p;
}

Poly e_product_poly(const Partition& mu, std::size_t n) {
    Poly p{{std::vector<int>(n, 0), Rational(1)}};
    for (int r : mu.parts())
        p = poly_mul(p, elementary_poly(r, n), n);
    return p;
}

Rational eval_at(const Poly& p, const std::vector<Rational>& point) {
    Rational total(0);
    for (const auto& [mon, coeff] : p) {
        Rational v = coeff;
        for (std::size_t i = 0; i < mon.size(); ++i)
            for (int t = 0; t < mon[i]; ++t)
                v *= point[i];
        total += v;
    }
    return total;
}

} // namespace

TEST_CASE("monomial_to_elementary on the small cases") {
    REQUIRE(monomial_to_elementary(Partition{1}).terms ==
            std::map<Partition, Rational>{{Partition{1}, Rational(1)}});
    REQUIRE(monomial_to_elementary(Partition{1, 1}).terms ==
            std::map<Partition, Rational>{{Partition{2}, Rational(1)}});
    REQUIRE(monomial_to_elementary(Partition{2}).terms ==
            std::map<Partition, Rational>{{Partition{2}, Rational(-2)},
                                          {Partition{1, 1}, Rational(1)}});
    REQUIRE(monomial_to_elementary(Partition{2, 1}).terms ==
            std::map<Partition, Rational>{{Partition{3}, Rational(-3)},
                                          {Partition{2, 1}, Rational(1)}});
    REQUIRE_THROWS_AS(monomial_to_elementary(Partition{}), std::invalid_argument);
}

TEST_CASE("elementary_to_monomial on the small cases") {
    REQUIRE(elementary_to_monomial(Partition{1}) ==
            std::map<Partition, Rational>{{Partition{1}, Rational(1)}});
    REQUIRE(elementary_to_monomial(Partition{1, 1}) ==
            std::map<Partition, Rational>{{Partition{2}, Rational(1)},
                                          {Partition{1, 1}, Rational(2)}});
    REQUIRE(elementary_to_monomial(Partition{2}) ==
            std::map<Partition, Rational>{{Partition{1, 1}, Rational(1)}});
}

TEST_CASE("power sums by Newton's identities") {
    REQUIRE(power_sum_in_elementary(1).terms ==
            std::map<Partition, Rational>{{Partition{1}, Rational(1)}});
    REQUIRE(power_sum_in_elementary(2).terms ==
            std::map<Partition, Rational>{{Partition{2}, Rational(-2)},
                                          {Partition{1, 1}, Rational(1)}});
    REQUIRE(power_sum_in_elementary(3).terms ==
            std::map<Partition, Rational>{{Partition{3}, Rational(3)},
                                          {Partition{2, 1}, Rational(-3)},
                                          {Partition{1, 1, 1}, Rational(1)}});
}

TEST_CASE("round trip m -> e -> m is the identity up to weight 10") {
    for (int w = 1; w <= 10; ++w)
        for (const Partition& lambda : enumerate_partitions(w)) {
            std::map<Partition, Rational> back;
            for (const auto& [mu, r] : monomial_to_elementary(lambda).terms)
                for (const auto& [nu, s] : elementary_to_monomial(mu)) {
                    auto [it, inserted] = back.emplace(nu, r * s);
                    if (!inserted)
                        it->second += r * s;
                }
            for (auto it = back.begin(); it != back.end();)
                it = it->second.is_zero() ? back.erase(it) : std::next(it);
            REQUIRE(back == std::map<Partition, Rational>{{lambda, Rational(1)}});
        }
}

TEST_CASE("two code paths for the power sum agree up to weight 10") {
    for (int n = 1; n <= 10; ++n)
        REQUIRE(monomial_to_elementary(Partition{n}) == power_sum_in_elementary(n));
}

TEST_CASE("transition coefficients are integers") {
    for (int w = 1; w <= 8; ++w)
        for (const Partition& p : enumerate_partitions(w)) {
            for (const auto& [mu, r] : monomial_to_elementary(p).terms)
                REQUIRE(r.is_integer());
            for (const auto& [nu, s] : elementary_to_monomial(p))
                REQUIRE(s.is_integer());
        }
}

TEST_CASE("explicit polynomial identity in weight-many variables") {
    for (int w = 1; w <= 6; ++w)
        for (const Partition& lambda : enumerate_partitions(w)) {
            const std::size_t n = static_cast<std::size_t>(w);
            Poly rhs;
            for (const auto& [mu, r] : monomial_to_elementary(lambda).terms) {
                Poly scaled = e_product_poly(mu, n);
                for (auto& [mon, coeff] : scaled)
                    coeff *= r;
                for (const auto& [mon, coeff] : scaled) {
                    auto [it, inserted] = rhs.emplace(mon, coeff);
                    if (!inserted)
                        it->second += coeff;
                }
            }
            for (auto it = rhs.begin(); it != rhs.end();)
                it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
            REQUIRE(rhs == monomial_poly(lambda, n));
        }
}

TEST_CASE("random-point evaluation agrees up to weight 10") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int w = 7; w <= 10; ++w)
        for (const Partition& lambda : enumerate_partitions(w)) {
            const std::size_t n = static_cast<std::size_t>(w);
            std::vector<Rational> point(n);
            for (auto& v : point)
                v = Rational(val(rng));
            Rational lhs = eval_at(monomial_poly(lambda, n), point);
            Rational rhs(0);
            for (const auto& [mu, r] : monomial_to_elementary(lambda).terms) {
                Rational prod = r;
                for (int part : mu.parts())
                    prod *= eval_at(elementary_poly(part, n), point);
                rhs += prod;
            }
            REQUIRE(lhs == rhs);
        }
}
