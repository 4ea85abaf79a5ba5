#ifndef PONTCALC_PARAM_POLY_HPP
#define PONTCALC_PARAM_POLY_HPP

#include "pontcalc/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pontcalc {

/// Monomial in formal parameters: name -> exponent, exponents > 0.
/// The empty map is the constant monomial.
using ParamMonomial = std::map<std::string, unsigned>;

inline unsigned monomial_degree(const ParamMonomial& m) {
    unsigned d = 0;
    for (const auto& [name, e] : m)
        d += e;
    return d;
}

/// Sparse polynomial over Rational in named formal parameters (the bundle
/// constants c). Canonical form: no zero coefficients, no zero exponents.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& r) {
        if (!r.is_zero())
            terms_[ParamMonomial{}] = r;
    }
    ParamPoly(int n) : ParamPoly(Rational(n)) {}

    static ParamPoly parameter(const std::string& name, unsigned exp = 1) {
        ParamPoly p;
        if (exp == 0)
            return ParamPoly(Rational(1));
        p.terms_[ParamMonomial{{name, exp}}] = Rational(1);
        return p;
    }

    const std::map<ParamMonomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    /// Constant term (zero if absent).
    Rational constant_term() const {
        auto it = terms_.find(ParamMonomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Requires is_constant().
    Rational constant_value() const {
        if (!is_constant())
            throw std::invalid_argument("ParamPoly: not a constant: " + to_string());
        return constant_term();
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, monomial_degree(m));
        return d;
    }

    std::set<std::string> parameters() const {
        std::set<std::string> ps;
        for (const auto& [m, c] : terms_)
            for (const auto& [name, e] : m)
                ps.insert(name);
        return ps;
    }

    ParamPoly operator-() const {
        ParamPoly r;
        for (const auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, -c);
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                ParamMonomial m = ma;
                for (const auto& [name, e] : mb)
                    m[name] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const Rational& s) {
        ParamPoly r;
        if (s.is_zero())
            return r;
        for (const auto& [m, c] : a.terms_)
            r.terms_[m] = c * s;
        return r;
    }
    friend ParamPoly operator*(const Rational& s, const ParamPoly& a) { return a * s; }

    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly pow(unsigned e) const {
        ParamPoly r(Rational(1));
        for (unsigned i = 0; i < e; ++i)
            r *= *this;
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    /// Exact substitution of every parameter. The assignment must cover all
    /// parameters occurring in the polynomial.
    Rational specialize(const std::map<std::string, Rational>& assignment) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (const auto& [name, e] : m) {
                auto it = assignment.find(name);
                if (it == assignment.end())
                    throw std::invalid_argument("specialize: missing parameter '" + name +
                                                "'");
                Rational p(1);
                for (unsigned i = 0; i < e; ++i)
                    p *= it->second;
                v *= p;
            }
            total += v;
        }
        return total;
    }

    /// Canonical text form, e.g. "-21*c", "3*c^2 - 1". Monomials are sorted
    /// by total degree descending, then by exponents on lexicographically
    /// ordered parameter names.
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::vector<const std::pair<const ParamMonomial, Rational>*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_)
            order.push_back(&t);
        std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
            return print_less(a->first, b->first);
        });
        std::string out;
        bool first = true;
        for (auto* t : order) {
            const Rational& c = t->second;
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0)
                    out += '-';
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            if (t->first.empty()) {
                out += a.to_string();
                continue;
            }
            if (!a.is_one()) {
                out += a.to_string();
                out += '*';
            }
            bool first_factor = true;
            for (const auto& [name, e] : t->first) {
                if (!first_factor)
                    out += '*';
                first_factor = false;
                out += name;
                if (e > 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

    /// Parses the to_string format (whitespace-tolerant).
    static ParamPoly parse(std::string_view text);

private:
    void add_term(const ParamMonomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero())
                terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    // Print order: higher total degree first; ties broken by the first
    // (lexicographically smallest) parameter name where exponents differ,
    // larger exponent first.
    static bool print_less(const ParamMonomial& a, const ParamMonomial& b) {
        unsigned da = monomial_degree(a), db = monomial_degree(b);
        if (da != db)
            return da > db;
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia->first != ib->first)
                return ia->first < ib->first;
            if (ia->second != ib->second)
                return ia->second > ib->second;
            ++ia;
            ++ib;
        }
        return ib == b.end() && ia != a.end();
    }

    std::map<ParamMonomial, Rational> terms_;
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    ParamPoly run() {
        ParamPoly out;
        skip_ws();
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw std::invalid_argument("ParamPoly::parse: expected '+' or '-' at '" +
                                            rest() + "'");
            }
            out += term() * Rational(sign);
            skip_ws();
            first = false;
        }
        if (first)
            throw std::invalid_argument("ParamPoly::parse: empty input");
        return out;
    }

private:
    ParamPoly term() {
        Rational coeff(1);
        ParamMonomial mono;
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size())
                break;
            char ch = peek();
            if (ch >= '0' && ch <= '9') {
                coeff *= number();
            } else if (is_name_start(ch)) {
                std::string name = identifier();
                unsigned e = 1;
                skip_ws();
                if (pos_ < text_.size() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = static_cast<unsigned>(uint_value());
                }
                mono[name] += e;
            } else {
                throw std::invalid_argument("ParamPoly::parse: unexpected '" +
                                            std::string(1, ch) + "'");
            }
            saw_factor = true;
            skip_ws();
            if (pos_ < text_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!saw_factor)
            throw std::invalid_argument("ParamPoly::parse: empty term");
        ParamPoly p(coeff);
        for (const auto& [name, e] : mono)
            p *= ParamPoly::parameter(name, e);
        return p;
    }

    Rational number() {
        BigInt n = uint_value();
        skip_ws();
        if (pos_ < text_.size() && peek() == '/') {
            ++pos_;
            skip_ws();
            return Rational(n, uint_value());
        }
        return Rational(n);
    }

    BigInt uint_value() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && peek() >= '0' && peek() <= '9')
            ++pos_;
        if (pos_ == start)
            throw std::invalid_argument("ParamPoly::parse: expected digits at '" + rest() +
                                        "'");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (is_name_start(peek()) || (peek() >= '0' && peek() <= '9')))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_name_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }

    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }
    std::string rest() const { return std::string(text_.substr(pos_)); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ParamPoly ParamPoly::parse(std::string_view text) {
    return detail::PolyParser(text).run();
}

} // namespace pontcalc

#endif // PONTCALC_PARAM_POLY_HPP
