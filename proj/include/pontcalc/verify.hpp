#ifndef PONTCALC_VERIFY_HPP
#define PONTCALC_VERIFY_HPP

#include "pontcalc/char_numbers.hpp"
#include "pontcalc/l_oracle.hpp"
#include "pontcalc/l_solver.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace pontcalc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int max_i = 6;
    /// Test hook: runs the bundle examples against a model with the
    /// orientation of the fiber relation flipped; the affected checks must
    /// then fail. Exercises the failure path end to end.
    bool corrupt_relation = false;
};

namespace detail {

inline CheckResult timed_check(const std::string& name,
                               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    return r;
}

/// X_c with the fiber relation deliberately mis-signed
/// (y^{2k+1} = +c x y^{2k-1}); negative control for the verify harness.
inline ManifoldModel corrupted_projective_bundle(int k, const ParamPoly& c) {
    std::vector<RingModel::Generator> gens{{"y", 2}, {"x", 4}};
    RewriteRule x_sq{RingMonomial{0, 2}, {}};
    RewriteRule y_top{RingMonomial{static_cast<std::uint32_t>(2 * k + 1), 0},
                      {{RingMonomial{static_cast<std::uint32_t>(2 * k - 1), 1}, c}}};
    std::map<RingMonomial, ParamPoly> fundamental{
        {RingMonomial{static_cast<std::uint32_t>(2 * k), 1}, ParamPoly(1)}};
    RingModel ring(std::move(gens), {std::move(x_sq), std::move(y_top)}, 4 * (k + 1),
                   std::move(fundamental));
    ClassElement y = ring.generator_element("y");
    ClassElement x = ring.generator_element("x");
    ClassElement y2 = ring.mul(y, y);
    ClassElement root_e1 = y2 * ParamPoly(2) - x * (ParamPoly(2) * c);
    ClassElement y2_plus_cx = y2 + x * c;
    ClassElement root_e2 = ring.mul(y2_plus_cx, y2_plus_cx);
    ClassElement total_p = ring.pow(ring.unit() + y2, static_cast<unsigned>(2 * k - 1));
    total_p = ring.mul(total_p, ring.unit() + root_e1 + root_e2);
    return ManifoldModel{"corrupt", k + 1,      std::move(ring), std::move(total_p),
                         Rational(0), c.parameters()};
}

inline std::string expect_number(const ManifoldModel& m, const Partition& j,
                                 const ParamPoly& want) {
    ParamPoly got = pontryagin_number(m, j);
    if (got == want)
        return "";
    return "p_" + j.to_string() + " = " + got.to_string() + ", expected " +
           want.to_string();
}

} // namespace detail

/// Conformance battery: closed-form bundle values, the root-square power-sum
/// identity, solver-vs-oracle agreement, constant independence, and
/// convolution-vs-tensor path equivalence. Every check is exact; max_i
/// bounds the solver-facing checks.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opts = {}) {
    using detail::timed_check;
    std::vector<CheckResult> out;
    const ParamPoly c = ParamPoly::parameter("c");

    out.push_back(timed_check("lemma:p1-power;k<=8", [&] {
        for (int k = 1; k <= 8; ++k) {
            ManifoldModel x = projective_bundle(k, c);
            BigInt factor = BigInt(4 * k + 3);
            for (int t = 0; t < k; ++t)
                factor *= 2 * k + 1;
            std::string err = detail::expect_number(
                x, Partition(std::vector<int>(static_cast<std::size_t>(k + 1), 1)),
                c * Rational(-factor));
            if (!err.empty())
                return "k=" + std::to_string(k) + ": " + err;
        }
        return std::string{};
    }));

    out.push_back(timed_check("lemma:p(k+1);k<=8", [&] {
        for (int k = 1; k <= 8; ++k) {
            ManifoldModel x = projective_bundle(k, c);
            std::string err = detail::expect_number(
                x, Partition{k + 1}, c * Rational(-binomial(2 * k + 1, k + 1)));
            if (!err.empty())
                return "k=" + std::to_string(k) + ": " + err;
        }
        return std::string{};
    }));

    out.push_back(timed_check("lemma:p2*p1-power;k<=8", [&] {
        for (int k = 1; k <= 8; ++k) {
            ManifoldModel x = projective_bundle(k, c);
            BigInt factor = BigInt(4 * k * k + 3 * k - 4);
            for (int t = 0; t < k - 1; ++t)
                factor *= 2 * k + 1;
            std::vector<int> parts{2};
            for (int t = 0; t < k - 1; ++t)
                parts.push_back(1);
            std::string err = detail::expect_number(x, Partition(std::move(parts)),
                                                    c * Rational(-factor));
            if (!err.empty())
                return "k=" + std::to_string(k) + ": " + err;
        }
        return std::string{};
    }));

    out.push_back(timed_check("prop:s(k+1);k<=8", [&] {
        for (int k = 1; k <= 8; ++k) {
            ManifoldModel x = projective_bundle(k, c);
            ParamPoly got = s_number(x, k + 1);
            ParamPoly want = c * Rational(-(2 * k + 1) * (2 * k + 3));
            if (!(got == want))
                return "k=" + std::to_string(k) + ": s = " + got.to_string() +
                       ", expected " + want.to_string();
        }
        return std::string{};
    }));

    out.push_back(timed_check("example:k=1", [&] {
        ManifoldModel x = opts.corrupt_relation
                              ? detail::corrupted_projective_bundle(1, c)
                              : projective_bundle(1, c);
        std::string err = detail::expect_number(x, Partition{1, 1}, c * Rational(-21));
        if (err.empty())
            err = detail::expect_number(x, Partition{2}, c * Rational(-3));
        return err;
    }));

    out.push_back(timed_check("example:k=2", [&] {
        ManifoldModel x = opts.corrupt_relation
                              ? detail::corrupted_projective_bundle(2, c)
                              : projective_bundle(2, c);
        std::string err = detail::expect_number(x, Partition{1, 1, 1}, c * Rational(-275));
        if (err.empty())
            err = detail::expect_number(x, Partition{2, 1}, c * Rational(-90));
        if (err.empty())
            err = detail::expect_number(x, Partition{3}, c * Rational(-10));
        return err;
    }));

    out.push_back(timed_check("example:cp2*xc(k=1)", [&] {
        ManifoldModel x = opts.corrupt_relation
                              ? detail::corrupted_projective_bundle(1, c)
                              : projective_bundle(1, c);
        ManifoldModel m = product(complex_projective_even(1), x);
        std::string err = detail::expect_number(m, Partition{1, 1, 1}, c * Rational(-189));
        if (err.empty())
            err = detail::expect_number(m, Partition{2, 1}, c * Rational(-72));
        if (err.empty())
            err = detail::expect_number(m, Partition{3}, c * Rational(-9));
        return err;
    }));

    for (int k = 1; k <= 8; ++k) {
        out.push_back(timed_check("eq-lem:k=" + std::to_string(k) + ";n<=10", [&, k] {
            ManifoldModel xm = projective_bundle(k, c);
            const RingModel& ring = xm.ring;
            ClassElement y = ring.generator_element("y");
            ClassElement x = ring.generator_element("x");
            ClassElement y2 = ring.mul(y, y);
            ClassElement e1 = y2 * ParamPoly(2) - x * (ParamPoly(2) * c);
            ClassElement y2cx = y2 + x * c;
            ClassElement e2 = ring.mul(y2cx, y2cx);
            std::vector<ClassElement> ps(12);
            ps[1] = e1;
            ps[2] = ring.mul(e1, e1) - e2 * ParamPoly(2);
            for (int n = 3; n <= 11; ++n)
                ps[n] = ring.mul(e1, ps[n - 1]) - ring.mul(e2, ps[n - 2]);
            for (int n = 0; n <= 10; ++n) {
                ClassElement rhs =
                    ring.pow(y, static_cast<unsigned>(2 * n + 2)) * ParamPoly(2) -
                    ring.mul(x, ring.pow(y, static_cast<unsigned>(2 * n))) *
                        (c * Rational(2 * (n + 1) * (2 * n + 1)));
                if (!(ps[n + 1] == rhs))
                    return "mismatch at n=" + std::to_string(n);
            }
            return std::string{};
        }));
    }

    for (int i = 1; i <= opts.max_i; ++i) {
        out.push_back(timed_check("solver-vs-oracle:i=" + std::to_string(i), [i] {
            return oracle_compare(i) ? std::string{}
                                     : "solver and oracle disagree";
        }));
    }

    for (int i = 2; i <= std::min(5, opts.max_i); ++i) {
        out.push_back(timed_check("c-independence:i=" + std::to_string(i), [i] {
            std::vector<GeneratorAssignment> assigns{GeneratorAssignment{Rational(1)},
                                                     GeneratorAssignment{Rational(2)},
                                                     GeneratorAssignment{Rational(-3)}};
            return verify_independence(i, assigns) ? std::string{}
                                                   : "L_i depends on the constants";
        }));
    }

    for (int i = 1; i <= std::min(5, opts.max_i); ++i) {
        out.push_back(timed_check("convolution-vs-tensor:i=" + std::to_string(i), [i] {
            for (const Partition& part : enumerate_partitions(i)) {
                CharVector direct =
                    char_vector(basis_manifold_symbolic(part), CharBasis::P);
                CharVector conv = basis_char_vector_symbolic(part, "c", CharBasis::P);
                if (!(direct == conv))
                    return "paths differ on alpha_" + part.to_string();
            }
            return std::string{};
        }));
    }

    return out;
}

} // namespace pontcalc

#endif // PONTCALC_VERIFY_HPP
