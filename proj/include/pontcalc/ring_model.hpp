#ifndef PONTCALC_RING_MODEL_HPP
#define PONTCALC_RING_MODEL_HPP

#include "pontcalc/param_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pontcalc {

/// Thrown when a model would exceed the configured basis-size guard.
/// Callers building products should fall back to the characteristic-number
/// convolution path instead of a tensor model.
class BasisGuardError : public std::runtime_error {
public:
    explicit BasisGuardError(const std::string& what) : std::runtime_error(what) {}
};

class NonConfluentError : public std::runtime_error {
public:
    explicit NonConfluentError(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vector over the model's generator list.
using RingMonomial = std::vector<std::uint32_t>;

/// Cohomology class, possibly inhomogeneous: reduced basis monomial ->
/// ParamPoly coefficient. No zero coefficients.
class ClassElement {
public:
    ClassElement() = default;

    static ClassElement single(RingMonomial mon, ParamPoly coeff) {
        ClassElement e;
        if (!coeff.is_zero())
            e.terms_[std::move(mon)] = std::move(coeff);
        return e;
    }

    const std::map<RingMonomial, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const RingMonomial& mon, const ParamPoly& coeff) {
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(mon, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend ClassElement operator+(const ClassElement& a, const ClassElement& b) {
        ClassElement r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }
    friend ClassElement operator-(const ClassElement& a, const ClassElement& b) {
        ClassElement r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, -c);
        return r;
    }
    friend ClassElement operator*(const ClassElement& a, const ParamPoly& s) {
        ClassElement r;
        for (const auto& [m, c] : a.terms_)
            r.add_term(m, c * s);
        return r;
    }
    friend ClassElement operator*(const ParamPoly& s, const ClassElement& a) {
        return a * s;
    }
    ClassElement operator-() const {
        ClassElement r;
        for (const auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }
    ClassElement& operator+=(const ClassElement& o) { return *this = *this + o; }
    ClassElement& operator-=(const ClassElement& o) { return *this = *this - o; }

    friend bool operator==(const ClassElement& a, const ClassElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ClassElement& a, const ClassElement& b) {
        return !(a == b);
    }

private:
    std::map<RingMonomial, ParamPoly> terms_;
};

/// Oriented rewrite rule: whenever lhs divides a monomial, the lhs factor is
/// replaced by the right-hand combination. Every rhs monomial must be
/// strictly smaller than lhs in the (degree, lex) monomial order.
struct RewriteRule {
    RingMonomial lhs;
    std::vector<std::pair<RingMonomial, ParamPoly>> rhs;
};

/// Finite graded-commutative cohomology model presented by generators of
/// even degree, oriented rewrite relations, and a top-degree truncation.
/// The per-degree monomial basis and a confluence check over all monomials
/// up to top_degree are computed at construction; afterwards the model is
/// immutable.
class RingModel {
public:
    struct Generator {
        std::string name;
        int degree; // even, positive
    };

    static constexpr std::size_t kDefaultGuard = 1'000'000;

    RingModel(std::vector<Generator> gens, std::vector<RewriteRule> rules, int top_degree,
              std::map<RingMonomial, ParamPoly> fundamental,
              std::size_t guard = kDefaultGuard)
        : gens_(std::move(gens)),
          rules_(std::move(rules)),
          top_degree_(top_degree),
          guard_(guard),
          fundamental_(std::move(fundamental)) {
        validate();
        const std::vector<RingMonomial> all = enumerate_basis();
        check_confluence(all);
        for (const auto& [mon, v] : fundamental_) {
            if (degree_of(mon) != top_degree_ || applicable_rule(mon) != rules_.size())
                throw std::invalid_argument(
                    "RingModel: fundamental keys must be top-degree basis monomials");
        }
    }

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    int top_degree() const { return top_degree_; }
    std::size_t guard() const { return guard_; }
    const std::map<RingMonomial, ParamPoly>& fundamental() const { return fundamental_; }

    /// Reduced monomials of the given degree (empty above top_degree).
    const std::vector<RingMonomial>& basis(int degree) const {
        static const std::vector<RingMonomial> kEmpty;
        if (degree < 0 || degree > top_degree_)
            return kEmpty;
        return basis_[degree];
    }

    std::size_t basis_size() const {
        std::size_t n = 0;
        for (const auto& b : basis_)
            n += b.size();
        return n;
    }

    int degree_of(const RingMonomial& mon) const {
        int d = 0;
        for (std::size_t i = 0; i < mon.size(); ++i)
            d += static_cast<int>(mon[i]) * gens_[i].degree;
        return d;
    }

    ClassElement unit() const {
        return ClassElement::single(RingMonomial(gens_.size(), 0), ParamPoly(1));
    }

    ClassElement generator_element(const std::string& name) const {
        RingMonomial m(gens_.size(), 0);
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) {
                m[i] = 1;
                return ClassElement::single(std::move(m), ParamPoly(1));
            }
        throw std::invalid_argument("RingModel: no generator named '" + name + "'");
    }

    /// Normal form of coeff * mon. `steps`, when given, accumulates the
    /// number of rule applications.
    ClassElement reduce_monomial(const RingMonomial& mon, const ParamPoly& coeff,
                                 std::size_t* steps = nullptr) const {
        ClassElement out;
        if (coeff.is_zero() || degree_of(mon) > top_degree_)
            return out;
        std::size_t r = applicable_rule(mon);
        if (r == rules_.size()) {
            out.add_term(mon, coeff);
            return out;
        }
        if (steps)
            ++*steps;
        const RewriteRule& rule = rules_[r];
        for (const auto& [rm, rc] : rule.rhs) {
            RingMonomial next = mon;
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = next[i] - rule.lhs[i] + rm[i];
            out += reduce_monomial(next, coeff * rc, steps);
        }
        return out;
    }

    ClassElement reduce(const ClassElement& raw, std::size_t* steps = nullptr) const {
        ClassElement out;
        for (const auto& [m, c] : raw.terms())
            out += reduce_monomial(m, c, steps);
        return out;
    }

    /// Fully reduced product.
    ClassElement mul(const ClassElement& a, const ClassElement& b) const {
        ClassElement out;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                RingMonomial m(gens_.size(), 0);
                for (std::size_t i = 0; i < m.size(); ++i)
                    m[i] = ma[i] + mb[i];
                out += reduce_monomial(m, ca * cb);
            }
        return out;
    }

    ClassElement pow(const ClassElement& a, unsigned e) const {
        ClassElement r = unit();
        for (unsigned i = 0; i < e; ++i)
            r = mul(r, a);
        return r;
    }

    /// Homogeneous component of the given degree.
    ClassElement component(const ClassElement& a, int degree) const {
        ClassElement out;
        for (const auto& [m, c] : a.terms())
            if (degree_of(m) == degree)
                out.add_term(m, c);
        return out;
    }

    /// Applies the fundamental-class functional to the top-degree component;
    /// lower-degree components are ignored. Input monomials need not be in
    /// normal form.
    ParamPoly top_evaluate(const ClassElement& a) const {
        ParamPoly v;
        const ClassElement reduced = reduce(a);
        for (const auto& [m, c] : reduced.terms()) {
            if (degree_of(m) != top_degree_)
                continue;
            auto it = fundamental_.find(m);
            if (it != fundamental_.end())
                v += c * it->second;
        }
        return v;
    }

    std::string element_to_string(const ClassElement& a) const {
        if (a.is_zero())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : a.terms()) {
            if (!first)
                s += " + ";
            first = false;
            s += "(" + c.to_string() + ")";
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0)
                    continue;
                s += "*" + gens_[i].name;
                if (m[i] > 1)
                    s += "^" + std::to_string(m[i]);
            }
        }
        return s;
    }

    /// Tensor product: disjoint union of generators (duplicate names get a
    /// numeric suffix), lifted rules, added top degrees, and the product
    /// fundamental functional.
    static RingModel tensor(const RingModel& a, const RingModel& b, std::size_t guard) {
        std::vector<Generator> gens = a.gens_;
        for (const Generator& g : b.gens_) {
            Generator h = g;
            int salt = 2;
            auto taken = [&gens](const std::string& n) {
                return std::any_of(gens.begin(), gens.end(),
                                   [&n](const Generator& e) { return e.name == n; });
            };
            while (taken(h.name))
                h.name = g.name + std::to_string(salt++);
            gens.push_back(std::move(h));
        }

        const std::size_t na = a.gens_.size(), nb = b.gens_.size();
        auto lift_a = [na, nb](const RingMonomial& m) {
            RingMonomial r(na + nb, 0);
            std::copy(m.begin(), m.end(), r.begin());
            return r;
        };
        auto lift_b = [na, nb](const RingMonomial& m) {
            RingMonomial r(na + nb, 0);
            std::copy(m.begin(), m.end(), r.begin() + static_cast<std::ptrdiff_t>(na));
            return r;
        };

        std::vector<RewriteRule> rules;
        for (const RewriteRule& r : a.rules_) {
            RewriteRule lifted{lift_a(r.lhs), {}};
            for (const auto& [m, c] : r.rhs)
                lifted.rhs.emplace_back(lift_a(m), c);
            rules.push_back(std::move(lifted));
        }
        for (const RewriteRule& r : b.rules_) {
            RewriteRule lifted{lift_b(r.lhs), {}};
            for (const auto& [m, c] : r.rhs)
                lifted.rhs.emplace_back(lift_b(m), c);
            rules.push_back(std::move(lifted));
        }

        std::map<RingMonomial, ParamPoly> fundamental;
        for (const auto& [ma, va] : a.fundamental_)
            for (const auto& [mb, vb] : b.fundamental_) {
                RingMonomial m = lift_a(ma);
                const RingMonomial bm = lift_b(mb);
                for (std::size_t i = 0; i < m.size(); ++i)
                    m[i] += bm[i];
                fundamental[std::move(m)] = va * vb;
            }

        return RingModel(std::move(gens), std::move(rules), a.top_degree_ + b.top_degree_,
                         std::move(fundamental), guard);
    }

    static RingModel tensor(const RingModel& a, const RingModel& b) {
        return tensor(a, b, std::min(a.guard_, b.guard_));
    }

private:
    // (degree, lex on exponent vector) with larger exponent first at the
    // first differing position; used only to orient rules.
    bool monomial_less(const RingMonomial& a, const RingMonomial& b) const {
        int da = degree_of(a), db = degree_of(b);
        if (da != db)
            return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    }

    static bool divides(const RingMonomial& d, const RingMonomial& m) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] > m[i])
                return false;
        return true;
    }

    /// Index of the first applicable rule, or rules_.size().
    std::size_t applicable_rule(const RingMonomial& mon) const {
        for (std::size_t i = 0; i < rules_.size(); ++i)
            if (divides(rules_[i].lhs, mon))
                return i;
        return rules_.size();
    }

    void validate() const {
        if (top_degree_ < 0 || top_degree_ % 2 != 0)
            throw std::invalid_argument("RingModel: top_degree must be even and >= 0");
        for (const Generator& g : gens_)
            if (g.degree <= 0 || g.degree % 2 != 0)
                throw std::invalid_argument("RingModel: generator degrees must be even "
                                            "and positive");
        for (const RewriteRule& r : rules_) {
            if (r.lhs.size() != gens_.size())
                throw std::invalid_argument("RingModel: rule arity mismatch");
            if (std::all_of(r.lhs.begin(), r.lhs.end(),
                            [](std::uint32_t e) { return e == 0; }))
                throw std::invalid_argument("RingModel: rule lhs must be a nonunit "
                                            "monomial");
            for (const auto& [m, c] : r.rhs) {
                if (m.size() != gens_.size())
                    throw std::invalid_argument("RingModel: rule arity mismatch");
                if (!monomial_less(m, r.lhs))
                    throw std::invalid_argument(
                        "RingModel: rule rhs must be strictly below lhs in the "
                        "(degree, lex) order");
            }
        }
    }

    std::vector<RingMonomial> enumerate_basis() {
        basis_.assign(static_cast<std::size_t>(top_degree_) + 1, {});
        std::vector<RingMonomial> all;
        RingMonomial mon(gens_.size(), 0);
        auto rec = [&](auto&& self, std::size_t idx, int degree) -> void {
            if (idx == gens_.size()) {
                if (all.size() >= guard_)
                    throw BasisGuardError("RingModel: monomial count exceeds guard (" +
                                          std::to_string(guard_) + ")");
                all.push_back(mon);
                if (applicable_rule(mon) == rules_.size())
                    basis_[degree].push_back(mon);
                return;
            }
            const int gd = gens_[idx].degree;
            for (int e = 0; degree + e * gd <= top_degree_; ++e) {
                mon[idx] = static_cast<std::uint32_t>(e);
                self(self, idx + 1, degree + e * gd);
            }
            mon[idx] = 0;
        };
        rec(rec, 0, 0);
        return all;
    }

    /// Local confluence over every monomial up to top_degree: all one-step
    /// reducts must share one normal form. Together with the validated
    /// rule orientation (termination) this gives unique normal forms.
    void check_confluence(const std::vector<RingMonomial>& monomials) const {
        for (const RingMonomial& mon : monomials) {
            bool have_reference = false;
            ClassElement reference;
            for (std::size_t r = 0; r < rules_.size(); ++r) {
                if (!divides(rules_[r].lhs, mon))
                    continue;
                ClassElement after;
                for (const auto& [rm, rc] : rules_[r].rhs) {
                    RingMonomial next = mon;
                    for (std::size_t i = 0; i < next.size(); ++i)
                        next[i] = next[i] - rules_[r].lhs[i] + rm[i];
                    after += reduce_monomial(next, rc);
                }
                if (!have_reference) {
                    reference = after;
                    have_reference = true;
                } else if (after != reference) {
                    throw NonConfluentError("RingModel: rewrite system not confluent at " +
                                            element_to_string(ClassElement::single(
                                                mon, ParamPoly(1))));
                }
            }
        }
    }

    std::vector<Generator> gens_;
    std::vector<RewriteRule> rules_;
    int top_degree_;
    std::size_t guard_;
    std::vector<std::vector<RingMonomial>> basis_;
    std::map<RingMonomial, ParamPoly> fundamental_;
};

} // namespace pontcalc

#endif // PONTCALC_RING_MODEL_HPP
