#ifndef PONTCALC_CHAR_NUMBERS_HPP
#define PONTCALC_CHAR_NUMBERS_HPP

#include "pontcalc/manifolds.hpp"
#include "pontcalc/partition.hpp"
#include "pontcalc/symmetric_functions.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace pontcalc {

enum class CharBasis { P, S };

inline std::string to_string(CharBasis b) { return b == CharBasis::P ? "p" : "s"; }

/// Complete vector of characteristic numbers of a 4m-manifold, indexed by
/// the partitions of m in canonical order. In the p-basis the entry at J is
/// the Pontryagin number p_J; in the s-basis it is the evaluation of the
/// monomial symmetric function m_J in the Pontryagin roots (the transport
/// basis whose product rule is multiset splitting).
struct CharVector {
    int dim4 = 0;
    CharBasis basis = CharBasis::P;
    std::map<Partition, ParamPoly> values;

    friend bool operator==(const CharVector& a, const CharVector& b) {
        return a.dim4 == b.dim4 && a.basis == b.basis && a.values == b.values;
    }
};

/// Degree-4j component of the total Pontryagin class.
inline ClassElement pontryagin_class(const ManifoldModel& m, int j) {
    if (j == 0)
        return m.ring.unit();
    return m.ring.component(m.total_p, 4 * j);
}

/// Pontryagin number p_J = < prod_t p_{j_t}, [M] >. The weight of J must
/// equal dim4(M).
inline ParamPoly pontryagin_number(const ManifoldModel& m, const Partition& j) {
    if (j.weight() != m.dim4)
        throw std::invalid_argument("pontryagin_number: partition weight " +
                                    std::to_string(j.weight()) + " != dim4 " +
                                    std::to_string(m.dim4));
    ClassElement prod = m.ring.unit();
    for (int part : j.parts())
        prod = m.ring.mul(prod, pontryagin_class(m, part));
    return m.ring.top_evaluate(prod);
}

/// Thom's s-number: the power sum of the Pontryagin roots squared,
/// expanded over e_i -> p_i by Newton's identities. n must equal dim4(M).
inline ParamPoly s_number(const ManifoldModel& m, int n) {
    if (n < 1)
        throw std::invalid_argument("s_number: n must be >= 1");
    if (n != m.dim4)
        throw std::invalid_argument("s_number: n != dim4");
    ElemExpansion ps = power_sum_in_elementary(n);
    ParamPoly out;
    for (const auto& [mu, coeff] : ps.terms)
        out += coeff * pontryagin_number(m, mu);
    return out;
}

/// Basis change on a CharVector. p -> s applies the m-to-e transition rows
/// (s_J = sum_mu r_mu p_mu); s -> p applies the integer e-to-m rows.
inline CharVector convert_basis(const CharVector& v, CharBasis target) {
    if (v.basis == target || v.dim4 == 0) {
        CharVector r = v;
        r.basis = target;
        return r;
    }
    CharVector out{v.dim4, target, {}};
    for (const auto& [j, unused] : v.values) {
        const auto row = (target == CharBasis::S)
                             ? monomial_to_elementary(j).terms
                             : elementary_to_monomial(j);
        ParamPoly acc;
        for (const auto& [mu, coeff] : row)
            acc += coeff * v.values.at(mu);
        out.values[j] = std::move(acc);
    }
    return out;
}

/// All characteristic numbers of M in the requested basis, in canonical
/// partition order. The point (dim4 = 0) yields {(): 1}.
inline CharVector char_vector(const ManifoldModel& m, CharBasis basis) {
    CharVector pv{m.dim4, CharBasis::P, {}};
    for (const Partition& j : enumerate_partitions(m.dim4))
        pv.values[j] = pontryagin_number(m, j);
    return basis == CharBasis::P ? pv : convert_basis(pv, CharBasis::S);
}

/// Product formula in the s-basis: s_J(M x N) is the splitting convolution
/// sum over J1 + J2 = J of s_{J1}(M) * s_{J2}(N), where terms with weight
/// mismatch vanish. Avoids building tensor models entirely.
inline CharVector product_char_vector(const CharVector& vm, const CharVector& vn) {
    if (vm.basis != CharBasis::S || vn.basis != CharBasis::S)
        throw std::invalid_argument("product_char_vector: inputs must be s-basis");
    CharVector out{vm.dim4 + vn.dim4, CharBasis::S, {}};
    for (const Partition& j : enumerate_partitions(out.dim4)) {
        ParamPoly acc;
        for (const auto& [j1, j2] : ordered_splittings(j)) {
            if (j1.weight() != vm.dim4 || j2.weight() != vn.dim4)
                continue;
            acc += vm.values.at(j1) * vn.values.at(j2);
        }
        out.values[j] = std::move(acc);
    }
    return out;
}

/// True iff M generates the rational oriented cobordism ring in its
/// dimension: s_{dim4}(M) specialized at the assignment is nonzero.
inline bool generator_certificate(const ManifoldModel& m,
                                  const std::map<std::string, Rational>& assignment) {
    return !s_number(m, m.dim4).specialize(assignment).is_zero();
}

} // namespace pontcalc

#endif // PONTCALC_CHAR_NUMBERS_HPP
