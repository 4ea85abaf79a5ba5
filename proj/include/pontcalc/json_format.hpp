#ifndef PONTCALC_JSON_FORMAT_HPP
#define PONTCALC_JSON_FORMAT_HPP

#include "pontcalc/char_numbers.hpp"
#include "pontcalc/l_solver.hpp"

#include <json.hpp>

#include <string>

namespace pontcalc {

using Json = nlohmann::ordered_json;

inline Json partition_to_json(const Partition& p) {
    Json a = Json::array();
    for (int v : p.parts())
        a.push_back(v);
    return a;
}

inline Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& v : j)
        parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

/// {"dim4": m, "basis": "p"|"s", "entries": [{"partition": [...], "value": "..."}]}
/// in canonical partition order.
inline Json char_vector_to_json(const CharVector& v) {
    Json j;
    j["dim4"] = v.dim4;
    j["basis"] = to_string(v.basis);
    Json entries = Json::array();
    for (const auto& [p, value] : v.values) {
        Json e;
        e["partition"] = partition_to_json(p);
        e["value"] = value.to_string();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline CharVector char_vector_from_json(const Json& j) {
    CharVector v;
    v.dim4 = j.at("dim4").get<int>();
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "p" && basis != "s")
        throw std::invalid_argument("char_vector_from_json: basis must be 'p' or 's'");
    v.basis = basis == "p" ? CharBasis::P : CharBasis::S;
    for (const auto& e : j.at("entries"))
        v.values[partition_from_json(e.at("partition"))] =
            ParamPoly::parse(e.at("value").get<std::string>());
    return v;
}

/// {"i": 3, "terms": [{"partition": [3], "coefficient": "62/945"}, ...]} in
/// canonical partition order; a nonempty source tag is inserted after "i".
inline Json l_genus_to_json(const LGenusResult& r, const std::string& source = "") {
    Json j;
    j["i"] = r.i;
    if (!source.empty())
        j["source"] = source;
    Json terms = Json::array();
    for (const auto& [p, c] : r.coeffs) {
        Json t;
        t["partition"] = partition_to_json(p);
        t["coefficient"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline LGenusResult l_genus_from_json(const Json& j, std::string* source = nullptr) {
    LGenusResult r;
    r.i = j.at("i").get<int>();
    if (source)
        *source = j.contains("source") ? j.at("source").get<std::string>() : "";
    for (const auto& t : j.at("terms"))
        r.coeffs[partition_from_json(t.at("partition"))] =
            Rational::parse(t.at("coefficient").get<std::string>());
    return r;
}

/// Pretty form over a common denominator, e.g.
/// "L_3 = (62*p[3] - 13*p[2]*p[1] + 2*p[1]^3)/945".
inline std::string l_genus_pretty(const LGenusResult& r) {
    BigInt den = 1;
    for (const auto& [p, c] : r.coeffs)
        den = lcm(den, c.denominator());

    std::string sum;
    bool first = true;
    for (const auto& [p, c] : r.coeffs) {
        if (c.is_zero())
            continue;
        BigInt num = c.numerator() * (den / c.denominator());
        if (first) {
            if (num < 0)
                sum += '-';
            first = false;
        } else {
            sum += num < 0 ? " - " : " + ";
        }
        BigInt a = num < 0 ? BigInt(-num) : num;
        if (a != 1)
            sum += a.str() + "*";
        bool first_factor = true;
        for (const auto& [value, mult] : p.grouped()) {
            if (!first_factor)
                sum += '*';
            first_factor = false;
            sum += "p[" + std::to_string(value) + "]";
            if (mult > 1)
                sum += "^" + std::to_string(mult);
        }
    }
    if (sum.empty())
        sum = "0";

    std::string out = "L_" + std::to_string(r.i) + " = ";
    if (den == 1)
        out += sum;
    else
        out += "(" + sum + ")/" + den.str();
    return out;
}

} // namespace pontcalc

#endif // PONTCALC_JSON_FORMAT_HPP
