#ifndef PONTCALC_L_ORACLE_HPP
#define PONTCALC_L_ORACLE_HPP

#include "pontcalc/l_solver.hpp"
#include "pontcalc/symmetric_functions.hpp"

#include <stdexcept>
#include <vector>

namespace pontcalc {

/// Truncated even power series: coeffs[j] multiplies x^{2j}.
struct EvenSeries {
    int order = 0;
    std::vector<Rational> coeffs; // size order + 1
};

/// Q(x) = x/tanh(x) = x cosh(x)/sinh(x), expanded by exact division of
/// sum x^{2j}/(2j)! by sum x^{2j}/(2j+1)!. This sidesteps Bernoulli-number
/// sign and normalization conventions entirely.
inline EvenSeries q_series(int order) {
    if (order < 1)
        throw std::invalid_argument("q_series: order must be >= 1");
    std::vector<Rational> num(order + 1), den(order + 1);
    BigInt fact = 1;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) {
            fact *= 2 * j - 1;
            fact *= 2 * j;
        }
        num[j] = Rational(BigInt(1), fact);          // 1/(2j)!
        den[j] = Rational(BigInt(1), fact * (2 * j + 1)); // 1/(2j+1)!
    }
    std::vector<Rational> q(order + 1);
    for (int j = 0; j <= order; ++j) {
        Rational acc = num[j];
        for (int t = 1; t <= j; ++t)
            acc -= den[t] * q[j - t];
        q[j] = acc; // den[0] = 1
    }
    return EvenSeries{order, std::move(q)};
}

/// Degree-i polynomial of the multiplicative sequence attached to the
/// series: expand prod_{j=1..i} Q(t_j), take the part of total degree 2i,
/// which is sum over partitions lambda of i of (prod Q-coeffs) m_lambda in
/// the variables t_j^2, and push through the m-to-e transition reading
/// e_mu -> p_mu.
inline LGenusResult multiplicative_sequence(const EvenSeries& series, int i) {
    if (i < 1)
        throw std::invalid_argument("multiplicative_sequence: i must be >= 1");
    if (series.order < i)
        throw std::invalid_argument("multiplicative_sequence: series order too small");
    LGenusResult out{i, {}};
    for (const Partition& mu : enumerate_partitions(i))
        out.coeffs[mu] = Rational(0);
    for (const Partition& lambda : enumerate_partitions(i)) {
        Rational m_coeff(1);
        for (int part : lambda.parts())
            m_coeff *= series.coeffs[part];
        if (m_coeff.is_zero())
            continue;
        for (const auto& [mu, r] : monomial_to_elementary(lambda).terms)
            out.coeffs.at(mu) += m_coeff * r;
    }
    return out;
}

/// Cross-validation: the cobordism-basis solve and the x/tanh(x)
/// multiplicative sequence must produce the same L_i exactly.
inline bool oracle_compare(int i, const GeneratorAssignment& assignment = {}) {
    return multiplicative_sequence(q_series(i), i) == solve_l(i, assignment);
}

} // namespace pontcalc

#endif // PONTCALC_L_ORACLE_HPP
