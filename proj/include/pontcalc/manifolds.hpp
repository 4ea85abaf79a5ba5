#ifndef PONTCALC_MANIFOLDS_HPP
#define PONTCALC_MANIFOLDS_HPP

#include "pontcalc/rational.hpp"
#include "pontcalc/ring_model.hpp"

#include <set>
#include <string>
#include <utility>

namespace pontcalc {

/// A cohomology model bundled with the total Pontryagin class of the
/// tangent bundle, the fundamental-class functional (inside the ring), and
/// the manifold's signature. Real dimension is 4*dim4.
struct ManifoldModel {
    std::string name;
    int dim4 = 0;
    RingModel ring;
    ClassElement total_p; // unit constant term; degree-4j component is p_j
    Rational signature;
    std::set<std::string> params;
};

/// The one-point manifold: unit for products.
inline ManifoldModel point_manifold() {
    RingModel ring({}, {}, 0, {{RingMonomial{}, ParamPoly(1)}});
    ClassElement one = ring.unit();
    return ManifoldModel{"pt", 0, std::move(ring), std::move(one), Rational(1), {}};
}

/// CP^{2m}: truncated polynomial ring on a generator of degree 2 with
/// a^{2m+1} = 0, total Pontryagin class (1+a^2)^{2m+1}, <a^{2m}> = 1 and
/// signature one.
inline ManifoldModel complex_projective_even(int m,
                                             std::size_t guard = RingModel::kDefaultGuard) {
    if (m < 1)
        throw std::invalid_argument("complex_projective_even: m must be >= 1");
    std::vector<RingModel::Generator> gens{{"a", 2}};
    RewriteRule trunc{RingMonomial{static_cast<std::uint32_t>(2 * m + 1)}, {}};
    std::map<RingMonomial, ParamPoly> fundamental{
        {RingMonomial{static_cast<std::uint32_t>(2 * m)}, ParamPoly(1)}};
    RingModel ring(std::move(gens), {std::move(trunc)}, 4 * m, std::move(fundamental),
                   guard);

    ClassElement a = ring.generator_element("a");
    ClassElement one_plus_a2 = ring.unit() + ring.mul(a, a);
    ClassElement total_p = ring.pow(one_plus_a2, static_cast<unsigned>(2 * m + 1));

    return ManifoldModel{"cp:m=" + std::to_string(m), m,      std::move(ring),
                         std::move(total_p),          Rational(1), {}};
}

/// X_c, the projectivisation of a rank-(2k+1) complex bundle over S^4 with
/// second Chern number c: a CP^{2k}-bundle over S^4. Cohomology is generated
/// by y (degree 2) and x (degree 4) with x^2 = 0 and y^{2k+1} = -c x y^{2k-1};
/// orientation fixed by <x y^{2k}> = +1. Signature vanishes.
///
/// The total Pontryagin class is (1+y^2)^{2k-1}(1+y_1^2)(1+y_2^2), where the
/// formal roots only enter through y_1^2+y_2^2 = 2y^2-2cx and
/// (y_1 y_2)^2 = (y^2+cx)^2.
inline ManifoldModel projective_bundle(int k, const ParamPoly& c,
                                       std::size_t guard = RingModel::kDefaultGuard) {
    if (k < 1)
        throw std::invalid_argument("projective_bundle: k must be >= 1");

    // Generator order [y, x] orients y^{2k+1} -> x*y^{2k-1} downward in the
    // (degree, lex) monomial order.
    std::vector<RingModel::Generator> gens{{"y", 2}, {"x", 4}};
    RewriteRule x_sq{RingMonomial{0, 2}, {}};
    RewriteRule y_top{RingMonomial{static_cast<std::uint32_t>(2 * k + 1), 0},
                      {{RingMonomial{static_cast<std::uint32_t>(2 * k - 1), 1}, -c}}};
    std::map<RingMonomial, ParamPoly> fundamental{
        {RingMonomial{static_cast<std::uint32_t>(2 * k), 1}, ParamPoly(1)}};
    RingModel ring(std::move(gens), {std::move(x_sq), std::move(y_top)}, 4 * (k + 1),
                   std::move(fundamental), guard);

    ClassElement y = ring.generator_element("y");
    ClassElement x = ring.generator_element("x");
    ClassElement y2 = ring.mul(y, y);
    ClassElement root_e1 = y2 * ParamPoly(2) - x * (ParamPoly(2) * c);
    ClassElement y2_plus_cx = y2 + x * c;
    ClassElement root_e2 = ring.mul(y2_plus_cx, y2_plus_cx);

    ClassElement total_p = ring.pow(ring.unit() + y2, static_cast<unsigned>(2 * k - 1));
    total_p = ring.mul(total_p, ring.unit() + root_e1 + root_e2);

    std::string c_text;
    if (c.is_constant())
        c_text = c.constant_value().to_string();
    else if (c.terms().size() == 1 && c.terms().begin()->second.is_one() &&
             c.terms().begin()->first.size() == 1 &&
             c.terms().begin()->first.begin()->second == 1)
        c_text = "@" + c.terms().begin()->first.begin()->first;
    else
        c_text = c.to_string();

    return ManifoldModel{"xc:k=" + std::to_string(k) + ",c=" + c_text,
                         k + 1,
                         std::move(ring),
                         std::move(total_p),
                         Rational(0),
                         c.parameters()};
}

inline ManifoldModel projective_bundle(int k, const Rational& c,
                                       std::size_t guard = RingModel::kDefaultGuard) {
    return projective_bundle(k, ParamPoly(c), guard);
}

/// Total Pontryagin class of a complex bundle from its total Chern class:
/// p = c(E) * c(conjugate E) read off in degrees 4j, with the sign fixed so
/// that formal Chern roots y_i give p = prod (1 + y_i^2).
inline ClassElement chern_to_pontryagin(const ClassElement& chern, const RingModel& model) {
    if (model.component(chern, 0) != model.unit())
        throw std::invalid_argument("chern_to_pontryagin: total class needs unit "
                                    "constant term");
    ClassElement conj;
    for (const auto& [mon, coeff] : chern.terms()) {
        int half = model.degree_of(mon) / 2;
        conj.add_term(mon, half % 2 ? -coeff : coeff);
    }
    ClassElement q = model.mul(chern, conj);
    ClassElement total;
    for (int j = 0; 4 * j <= model.top_degree(); ++j) {
        ClassElement part = model.component(q, 4 * j);
        total += j % 2 ? -part : part;
    }
    return total;
}

/// Product manifold: tensor cohomology, Whitney product of total Pontryagin
/// classes, multiplicative signature. Caller is responsible for parameter
/// names being disjoint (or intentionally shared).
inline ManifoldModel product(const ManifoldModel& m, const ManifoldModel& n) {
    RingModel ring = RingModel::tensor(m.ring, n.ring);

    const std::size_t na = m.ring.generators().size();
    const std::size_t nb = n.ring.generators().size();
    auto lift = [na, nb](const ClassElement& e, bool left) {
        ClassElement out;
        for (const auto& [mon, c] : e.terms()) {
            RingMonomial r(na + nb, 0);
            std::copy(mon.begin(), mon.end(),
                      r.begin() + static_cast<std::ptrdiff_t>(left ? 0 : na));
            out.add_term(r, c);
        }
        return out;
    };

    ClassElement total_p = ring.mul(lift(m.total_p, true), lift(n.total_p, false));
    std::set<std::string> params = m.params;
    params.insert(n.params.begin(), n.params.end());

    std::string name;
    if (m.dim4 == 0)
        name = n.name;
    else if (n.dim4 == 0)
        name = m.name;
    else
        name = m.name + "*" + n.name;

    return ManifoldModel{std::move(name),       m.dim4 + n.dim4,
                         std::move(ring),       std::move(total_p),
                         m.signature * n.signature, std::move(params)};
}

} // namespace pontcalc

#endif // PONTCALC_MANIFOLDS_HPP
