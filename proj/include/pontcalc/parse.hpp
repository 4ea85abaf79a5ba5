#ifndef PONTCALC_PARSE_HPP
#define PONTCALC_PARSE_HPP

#include "pontcalc/l_solver.hpp"
#include "pontcalc/manifolds.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pontcalc {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

/// key=value pairs from "k=3,c=1".
inline std::map<std::string, std::string> key_values(std::string_view body,
                                                     const std::string& context) {
    std::map<std::string, std::string> kv;
    for (std::string_view item : split(body, ',')) {
        item = trim(item);
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument(context + ": expected key=value in '" +
                                        std::string(item) + "'");
        auto [it, inserted] = kv.emplace(std::string(trim(item.substr(0, eq))),
                                         std::string(trim(item.substr(eq + 1))));
        if (!inserted)
            throw std::invalid_argument(context + ": duplicate key '" + it->first + "'");
    }
    return kv;
}

} // namespace detail

/// One factor of the manifold mini-language: "cp:m=2", "xc:k=3,c=1",
/// "xc:k=3,c=@c1" (formal parameter).
inline ManifoldModel parse_manifold_factor(std::string_view text,
                                           std::size_t guard = RingModel::kDefaultGuard) {
    text = detail::trim(text);
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("manifold spec: expected 'cp:...' or 'xc:...' in '" +
                                    std::string(text) + "'");
    std::string kind(detail::trim(text.substr(0, colon)));
    auto kv = detail::key_values(text.substr(colon + 1), "manifold spec");

    if (kind == "cp") {
        auto it = kv.find("m");
        if (it == kv.end() || kv.size() != 1)
            throw std::invalid_argument("manifold spec: cp takes exactly m=<int>");
        return complex_projective_even(std::stoi(it->second), guard);
    }
    if (kind == "xc") {
        auto kit = kv.find("k");
        auto cit = kv.find("c");
        if (kit == kv.end() || cit == kv.end() || kv.size() != 2)
            throw std::invalid_argument("manifold spec: xc takes exactly k=<int>,c=<value>");
        const std::string& cval = cit->second;
        ParamPoly c = (!cval.empty() && cval[0] == '@')
                          ? ParamPoly::parameter(cval.substr(1))
                          : ParamPoly(Rational::parse(cval));
        return projective_bundle(std::stoi(kit->second), c, guard);
    }
    throw std::invalid_argument("manifold spec: unknown kind '" + kind + "'");
}

/// Product spec: factors joined by '*', e.g. "cp:m=1*xc:k=1,c=@c".
inline ManifoldModel parse_manifold_spec(std::string_view text,
                                         std::size_t guard = RingModel::kDefaultGuard) {
    auto factors = detail::split(text, '*');
    if (factors.empty() || detail::trim(text).empty())
        throw std::invalid_argument("manifold spec: empty");
    ManifoldModel m = parse_manifold_factor(factors[0], guard);
    for (std::size_t t = 1; t < factors.size(); ++t)
        m = product(m, parse_manifold_factor(factors[t], guard));
    return m;
}

/// Comma-separated partition, e.g. "1,1,1" or "3".
inline Partition parse_partition_list(std::string_view text) {
    std::vector<int> parts;
    for (std::string_view item : detail::split(text, ',')) {
        item = detail::trim(item);
        if (item.empty())
            throw std::invalid_argument("partition: empty part in '" + std::string(text) +
                                        "'");
        parts.push_back(std::stoi(std::string(item)));
    }
    return Partition(std::move(parts));
}

/// Linear combination of Pontryagin monomials, e.g. "7*p[2]-p[1]^2" or
/// "62*p[3]-13*p[2]*p[1]+2*p[1]^3". Every term must have weight i.
inline Combo parse_combo(std::string_view text, int i) {
    Combo combo{i, {}};
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("combo: " + msg + " at '" +
                                    std::string(text.substr(pos)) + "'");
    };
    auto read_uint = [&]() -> BigInt {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == start)
            fail("expected digits");
        return BigInt(std::string(text.substr(start, pos - start)));
    };

    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(sign);
        if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            BigInt num = read_uint();
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                coeff = coeff * Rational(num, read_uint());
            } else {
                coeff = coeff * Rational(num);
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }

        std::vector<int> parts;
        while (pos < text.size() && text[pos] == 'p') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '[')
                fail("expected '[' after p");
            ++pos;
            skip_ws();
            int j = static_cast<int>(read_uint());
            if (j < 1)
                fail("p index must be >= 1");
            skip_ws();
            if (pos >= text.size() || text[pos] != ']')
                fail("expected ']'");
            ++pos;
            skip_ws();
            int exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                exp = static_cast<int>(read_uint());
                skip_ws();
            }
            for (int t = 0; t < exp; ++t)
                parts.push_back(j);
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (parts.empty())
            fail("term without p[...] factors");

        Partition j_part(std::move(parts));
        if (j_part.weight() != i)
            throw std::invalid_argument("combo: term weight " +
                                        std::to_string(j_part.weight()) +
                                        " does not match i=" + std::to_string(i));
        auto [it, inserted] = combo.coeffs.emplace(j_part, coeff);
        if (!inserted)
            it->second += coeff;
        skip_ws();
    }
    if (combo.coeffs.empty())
        throw std::invalid_argument("combo: empty combination");
    return combo;
}

/// c-assignment string "2:1,3:-5" (per-dimension constants); "all:<value>"
/// or "*:<value>" sets the default used for unlisted dimensions.
inline GeneratorAssignment parse_c_assignment(std::string_view text) {
    GeneratorAssignment a;
    if (detail::trim(text).empty())
        return a;
    for (std::string_view item : detail::split(text, ',')) {
        item = detail::trim(item);
        auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("c-assignment: expected j:value in '" +
                                        std::string(item) + "'");
        std::string key(detail::trim(item.substr(0, colon)));
        Rational value = Rational::parse(detail::trim(item.substr(colon + 1)));
        if (key == "all" || key == "*") {
            GeneratorAssignment next(value);
            for (const auto& [j, c] : a.overrides())
                next.set(j, c);
            a = std::move(next);
        } else {
            a.set(std::stoi(key), value);
        }
    }
    return a;
}

/// Parameter assignment "c=1,c2=-3" for specializing formal constants.
inline std::map<std::string, Rational> parse_param_assignment(std::string_view text) {
    std::map<std::string, Rational> out;
    if (detail::trim(text).empty())
        return out;
    for (const auto& [key, value] : detail::key_values(text, "param assignment"))
        out[key] = Rational::parse(value);
    return out;
}

} // namespace pontcalc

#endif // PONTCALC_PARSE_HPP
