#ifndef PONTCALC_PARTITION_HPP
#define PONTCALC_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pontcalc {

/// Integer partition: weakly decreasing positive parts. Indexes both
/// Pontryagin-number monomials p_J and the cobordism basis manifolds
/// alpha_I. The empty partition has weight 0.
class Partition {
public:
    Partition() = default;

    /// Normalizing constructor: sorts the parts weakly decreasing.
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("Partition: parts must be >= 1");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        int w = 0;
        for (int p : parts_)
            w += p;
        return w;
    }

    /// Multiplicity of a given part value.
    int multiplicity(int value) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    /// (value, multiplicity) pairs, values descending.
    std::vector<std::pair<int, int>> grouped() const {
        std::vector<std::pair<int, int>> g;
        for (int p : parts_) {
            if (!g.empty() && g.back().first == p)
                ++g.back().second;
            else
                g.emplace_back(p, 1);
        }
        return g;
    }

    /// Conjugate (transposed Young diagram).
    Partition conjugate() const {
        std::vector<int> t;
        if (!parts_.empty())
            t.resize(parts_[0], 0);
        for (int p : parts_)
            for (int i = 0; i < p; ++i)
                ++t[i];
        return Partition(std::move(t));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    /// Canonical order: weight ascending, then descending lexicographic on
    /// part sequences -- within weight n, (n) comes first and (1,...,1)
    /// last. Serializations depend on this order.
    friend bool operator<(const Partition& a, const Partition& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb)
            return wa < wb;
        return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                            a.parts_.begin(), a.parts_.end());
    }
    friend bool operator>(const Partition& a, const Partition& b) { return b < a; }
    friend bool operator<=(const Partition& a, const Partition& b) { return !(b < a); }
    friend bool operator>=(const Partition& a, const Partition& b) { return !(a < b); }

    /// "[2,1]"; the empty partition prints as "[]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ']';
        return s;
    }

    static Partition parse(std::string_view text) {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw std::invalid_argument("Partition::parse: expected [..]");
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string_view tok =
                body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            parts.push_back(std::stoi(std::string(tok)));
            pos = comma == std::string_view::npos ? body.size() : comma + 1;
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

/// All partitions of n in canonical order ((n) first, (1,...,1) last).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(std::vector<int>(current));
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            self(self, remaining - k, k);
            current.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// All ordered pairs (J1, J2) of sub-multisets with J1 + J2 = J, each
/// distinct multiset pair exactly once. |result| = prod_m (mult_m(J) + 1).
inline std::vector<std::pair<Partition, Partition>> ordered_splittings(const Partition& j) {
    auto groups = j.grouped();
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> take(groups.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == groups.size()) {
            std::vector<int> left, right;
            for (std::size_t g = 0; g < groups.size(); ++g) {
                for (int i = 0; i < take[g]; ++i)
                    left.push_back(groups[g].first);
                for (int i = take[g]; i < groups[g].second; ++i)
                    right.push_back(groups[g].first);
            }
            out.emplace_back(Partition(std::move(left)), Partition(std::move(right)));
            return;
        }
        for (int t = 0; t <= groups[idx].second; ++t) {
            take[idx] = t;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace pontcalc

template <>
struct std::hash<pontcalc::Partition> {
    std::size_t operator()(const pontcalc::Partition& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts())
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};

#endif // PONTCALC_PARTITION_HPP
