#ifndef PONTCALC_SYMMETRIC_FUNCTIONS_HPP
#define PONTCALC_SYMMETRIC_FUNCTIONS_HPP

#include "pontcalc/partition.hpp"
#include "pontcalc/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace pontcalc {

/// A symmetric function of homogeneous weight written over a partition-
/// indexed basis (monomial m_lambda or elementary e_mu, depending on
/// context). No zero coefficients are stored.
struct ElemExpansion {
    int weight = 0;
    std::map<Partition, Rational> terms;

    friend bool operator==(const ElemExpansion& a, const ElemExpansion& b) {
        return a.weight == b.weight && a.terms == b.terms;
    }
};

namespace detail {

inline void add_term(std::map<Partition, Rational>& m, const Partition& key,
                     const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = m.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            m.erase(it);
    }
}

/// Coefficient of m_nu in m_lambda * e_r. Decrementing s_v of the nu-parts
/// of value v by one must reproduce lambda; the s_v are forced by the
/// multiplicity balance mult_v(lambda) = mult_v(nu) - s_v + s_{v+1}, so the
/// count is a product of binomials (or zero if any constraint fails).
inline BigInt m_times_e_coefficient(const Partition& lambda, int r, const Partition& nu) {
    int top = nu.empty() ? 0 : nu.parts().front();
    BigInt ways = 1;
    BigInt total = 0;
    BigInt carry = 0; // s_{v+1}
    for (int v = top; v >= 1; --v) {
        BigInt s = BigInt(nu.multiplicity(v)) - BigInt(lambda.multiplicity(v)) + carry;
        if (s < 0 || s > nu.multiplicity(v))
            return 0;
        ways *= binomial(nu.multiplicity(v), static_cast<int>(s));
        total += s;
        carry = s;
    }
    // Parts of lambda above top(nu) cannot exist.
    if (!lambda.empty() && lambda.parts().front() > top)
        return 0;
    return total == r ? ways : BigInt(0);
}

/// m-basis expansion of (expansion) * e_r.
inline std::map<Partition, Rational> mul_by_elementary(
    const std::map<Partition, Rational>& expansion, int r) {
    std::map<Partition, Rational> out;
    for (const auto& [lambda, coeff] : expansion) {
        // Candidate nu: bump t_v of the value-v parts to v+1 and append
        // (r - sum t_v) fresh parts equal to 1.
        auto groups = lambda.grouped();
        std::vector<int> take(groups.size(), 0);
        auto rec = [&](auto&& self, std::size_t idx, int used) -> void {
            if (used > r)
                return;
            if (idx == groups.size()) {
                std::vector<int> parts;
                for (std::size_t g = 0; g < groups.size(); ++g) {
                    for (int i = 0; i < take[g]; ++i)
                        parts.push_back(groups[g].first + 1);
                    for (int i = take[g]; i < groups[g].second; ++i)
                        parts.push_back(groups[g].first);
                }
                for (int i = used; i < r; ++i)
                    parts.push_back(1);
                Partition nu(std::move(parts));
                BigInt n = m_times_e_coefficient(lambda, r, nu);
                if (n != 0)
                    add_term(out, nu, coeff * Rational(n));
                return;
            }
            for (int t = 0; t <= groups[idx].second; ++t) {
                take[idx] = t;
                self(self, idx + 1, used + t);
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

/// Per-weight transition data between the m- and e-bases.
struct TransitionTable {
    // e_mu = sum_lambda e2m[mu][lambda] * m_lambda  (integer coefficients)
    std::map<Partition, std::map<Partition, Rational>> e2m;
    // m_lambda = sum_mu m2e[lambda][mu] * e_mu
    std::map<Partition, std::map<Partition, Rational>> m2e;
};

inline std::shared_ptr<const TransitionTable> transition_table(int weight) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const TransitionTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(weight);
        if (it != cache.end())
            return it->second;
    }

    auto table = std::make_shared<TransitionTable>();
    const auto parts = enumerate_partitions(weight);

    for (const Partition& mu_part : parts) {
        std::map<Partition, Rational> exp{{Partition{}, Rational(1)}};
        for (int r : mu_part.parts())
            exp = mul_by_elementary(exp, r);
        table->e2m[mu_part] = std::move(exp);
    }

    // Back-substitution: e_{nu'} = m_nu + (dominance-lower terms), so
    // processing nu from (1,...,1) upward resolves every m_nu in the
    // e-basis using only already-known expansions.
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const Partition& nu = *it;
        const Partition conj = nu.conjugate();
        const auto& row = table->e2m.at(conj);
        auto diag = row.find(nu);
        if (diag == row.end() || !diag->second.is_one())
            throw std::logic_error("transition_table: e-to-m matrix not unitriangular");
        std::map<Partition, Rational> result{{conj, Rational(1)}};
        for (const auto& [lambda, a] : row) {
            if (lambda == nu)
                continue;
            auto known = table->m2e.find(lambda);
            if (known == table->m2e.end())
                throw std::logic_error("transition_table: unexpected dominance order");
            for (const auto& [mu_key, b] : known->second)
                add_term(result, mu_key, -(a * b));
        }
        table->m2e[nu] = std::move(result);
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(weight, std::move(table));
    return it->second;
}

} // namespace detail

/// Expands the monomial symmetric function m_lambda over the elementary
/// basis: m_lambda = sum_mu r_mu e_mu, valid in any number of variables
/// >= weight(lambda).
inline ElemExpansion monomial_to_elementary(const Partition& lambda) {
    if (lambda.weight() < 1)
        throw std::invalid_argument("monomial_to_elementary: weight must be >= 1");
    auto table = detail::transition_table(lambda.weight());
    return ElemExpansion{lambda.weight(), table->m2e.at(lambda)};
}

/// Expands e_mu over the monomial basis. All coefficients are nonnegative
/// integers.
inline std::map<Partition, Rational> elementary_to_monomial(const Partition& mu) {
    if (mu.weight() < 1)
        throw std::invalid_argument("elementary_to_monomial: weight must be >= 1");
    auto table = detail::transition_table(mu.weight());
    return table->e2m.at(mu);
}

/// Newton's-identity expansion of the n-th power sum in e_1..e_n. Computed
/// by the recursion p_n = e_1 p_{n-1} - e_2 p_{n-2} + ... + (-1)^{n-1} n e_n,
/// independently of the transition tables.
inline ElemExpansion power_sum_in_elementary(int n) {
    if (n < 1)
        throw std::invalid_argument("power_sum_in_elementary: n must be >= 1");
    std::vector<std::map<Partition, Rational>> psums(n + 1);
    for (int j = 1; j <= n; ++j) {
        std::map<Partition, Rational> acc;
        for (int t = 1; t < j; ++t) {
            Rational sgn((t % 2) ? 1 : -1);
            for (const auto& [key, c] : psums[j - t]) {
                std::vector<int> parts = key.parts();
                parts.push_back(t);
                detail::add_term(acc, Partition(std::move(parts)), sgn * c);
            }
        }
        Rational sgn((j % 2) ? 1 : -1);
        detail::add_term(acc, Partition{j}, sgn * Rational(j));
        psums[j] = std::move(acc);
    }
    return ElemExpansion{n, std::move(psums[n])};
}

} // namespace pontcalc

#endif // PONTCALC_SYMMETRIC_FUNCTIONS_HPP
