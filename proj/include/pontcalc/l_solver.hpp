#ifndef PONTCALC_L_SOLVER_HPP
#define PONTCALC_L_SOLVER_HPP

#include "pontcalc/char_numbers.hpp"
#include "pontcalc/rat_matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pontcalc {

/// Choice of generator bundles: the dimension-4 generator is always CP^2;
/// in dimension 4j (j >= 2) the generator is X_{c_j}, a CP^{2j-2}-bundle
/// over S^4 with a nonzero rational c_j. Defaults to c_j = 1 everywhere.
class GeneratorAssignment {
public:
    GeneratorAssignment() : default_c_(1) {}
    explicit GeneratorAssignment(Rational default_c) : default_c_(std::move(default_c)) {
        if (default_c_.is_zero())
            throw std::invalid_argument("GeneratorAssignment: c must be nonzero");
    }

    void set(int j, Rational c) {
        if (j < 2)
            throw std::invalid_argument("GeneratorAssignment: index must be >= 2");
        if (c.is_zero())
            throw std::invalid_argument("GeneratorAssignment: c must be nonzero");
        overrides_[j] = std::move(c);
    }

    const Rational& c_for(int j) const {
        auto it = overrides_.find(j);
        return it == overrides_.end() ? default_c_ : it->second;
    }

    const Rational& default_c() const { return default_c_; }
    const std::map<int, Rational>& overrides() const { return overrides_; }

    friend bool operator==(const GeneratorAssignment& a, const GeneratorAssignment& b) {
        return a.default_c_ == b.default_c_ && a.overrides_ == b.overrides_;
    }

private:
    Rational default_c_;
    std::map<int, Rational> overrides_;
};

/// L_i = sum_J coeffs[J] * p_J over the partitions of i in canonical order.
struct LGenusResult {
    int i = 0;
    std::map<Partition, Rational> coeffs;

    friend bool operator==(const LGenusResult& a, const LGenusResult& b) {
        return a.i == b.i && a.coeffs == b.coeffs;
    }
};

/// A rational linear combination of Pontryagin numbers in dimension 4i.
struct Combo {
    int i = 0;
    std::map<Partition, Rational> coeffs;
};

/// Outcome of classify_combo: either a scalar multiple of the signature, or
/// a basis manifold alpha_I on which the combination is a nonzero
/// polynomial in the bundle constants (hence unbounded as they vary).
struct ClassifyResult {
    bool is_multiple = false;
    Rational ratio;      // set when is_multiple
    Partition witness;   // set otherwise
    ParamPoly value;     // f(alpha_witness), nonzero
};

namespace detail {

/// s-basis characteristic vector of the generator in dimension 4j with
/// bundle constant c (alpha_1 = CP^2 takes no constant).
inline CharVector generator_s_vector(int j, const ParamPoly& c) {
    ManifoldModel m = (j == 1) ? complex_projective_even(1) : projective_bundle(j - 1, c);
    return char_vector(m, CharBasis::S);
}

} // namespace detail

/// The basis manifold alpha_I as a tensor-product model. Kept as the direct
/// evaluation path for tests; the solver itself uses the convolution path.
inline ManifoldModel basis_manifold(const Partition& i_part,
                                    const GeneratorAssignment& assignment) {
    ManifoldModel m = point_manifold();
    for (int part : i_part.parts()) {
        ManifoldModel factor = (part == 1)
                                   ? complex_projective_even(1)
                                   : projective_bundle(part - 1, assignment.c_for(part));
        m = product(m, factor);
    }
    return m;
}

/// Characteristic vector of alpha_I = prod_t alpha_{i_t} by splitting
/// convolution of the factors' s-vectors; no tensor model is built.
inline CharVector basis_char_vector(const Partition& i_part,
                                    const GeneratorAssignment& assignment,
                                    CharBasis basis = CharBasis::P) {
    CharVector v{0, CharBasis::S, {{Partition{}, ParamPoly(1)}}};
    for (int part : i_part.parts())
        v = product_char_vector(
            v, detail::generator_s_vector(part, ParamPoly(assignment.c_for(part))));
    return convert_basis(v, basis);
}

/// Same, but every X_c factor receives its own formal parameter
/// (prefix1, prefix2, ...), so nonvanishing results are genuinely nonzero
/// polynomials rather than accidents of one constant.
inline CharVector basis_char_vector_symbolic(const Partition& i_part,
                                             const std::string& prefix = "c",
                                             CharBasis basis = CharBasis::P) {
    CharVector v{0, CharBasis::S, {{Partition{}, ParamPoly(1)}}};
    int next_param = 0;
    for (int part : i_part.parts()) {
        ParamPoly c;
        if (part >= 2)
            c = ParamPoly::parameter(prefix + std::to_string(++next_param));
        v = product_char_vector(v, detail::generator_s_vector(part, c));
    }
    return convert_basis(v, basis);
}

/// Tensor-model counterpart of basis_char_vector_symbolic, with the same
/// parameter naming. Test oracle for the convolution path.
inline ManifoldModel basis_manifold_symbolic(const Partition& i_part,
                                             const std::string& prefix = "c") {
    ManifoldModel m = point_manifold();
    int next_param = 0;
    for (int part : i_part.parts()) {
        ManifoldModel factor =
            (part == 1) ? complex_projective_even(1)
                        : projective_bundle(part - 1, ParamPoly::parameter(
                                                          prefix + std::to_string(++next_param)));
        m = product(m, factor);
    }
    return m;
}

/// The linear system of the dimension-4i determination: rows and columns
/// are indexed by the partitions of i in canonical order, A[I][J] = p_J(alpha_I),
/// and the right-hand side is the signature of alpha_I -- which is 1 for
/// alpha_{(1,...,1)} = (CP^2)^i and 0 for every other basis manifold, since
/// those contain an X_c factor of vanishing signature.
inline std::pair<RatMatrix, std::vector<Rational>> assemble(
    int i, const GeneratorAssignment& assignment = {}) {
    if (i < 1)
        throw std::invalid_argument("assemble: i must be >= 1");
    const auto parts = enumerate_partitions(i);
    const std::size_t n = parts.size();
    RatMatrix a(n, n);
    std::vector<Rational> b(n);
    const Partition ones(std::vector<int>(static_cast<std::size_t>(i), 1));
    for (std::size_t row = 0; row < n; ++row) {
        CharVector v = basis_char_vector(parts[row], assignment, CharBasis::P);
        std::size_t col = 0;
        for (const auto& [j, value] : v.values)
            a.at(row, col++) = value.constant_value();
        b[row] = parts[row] == ones ? Rational(1) : Rational(0);
    }
    return {std::move(a), std::move(b)};
}

/// Solves for the unique combination L_i with sum_J lambda_J p_J(alpha_I) =
/// sigma(alpha_I). A singular system would mean a violated Thom-basis
/// assumption and surfaces as SingularMatrixError.
inline LGenusResult solve_l(int i, const GeneratorAssignment& assignment = {}) {
    auto [a, b] = assemble(i, assignment);
    std::vector<Rational> x = linear_solve(std::move(a), std::move(b));
    LGenusResult r{i, {}};
    std::size_t col = 0;
    for (const Partition& j : enumerate_partitions(i))
        r.coeffs[j] = x[col++];
    return r;
}

/// Decides whether f is a multiple of the signature by evaluating it on
/// every basis manifold alpha_I with symbolic bundle constants. If f
/// vanishes on all alpha_I except (1,...,1), it is f((CP^2)^i) * L_i;
/// otherwise the first non-vanishing alpha_I witnesses unboundedness: the
/// value is a nonzero polynomial, every monomial of total degree equal to
/// the number of parts >= 2.
inline ClassifyResult classify_combo(const Combo& f) {
    if (f.i < 1)
        throw std::invalid_argument("classify_combo: i must be >= 1");
    bool nonzero = false;
    for (const auto& [j, coeff] : f.coeffs) {
        if (j.weight() != f.i)
            throw std::invalid_argument("classify_combo: partition " + j.to_string() +
                                        " has weight != i");
        nonzero = nonzero || !coeff.is_zero();
    }
    if (!nonzero)
        throw std::invalid_argument("classify_combo: zero combination");

    const Partition ones(std::vector<int>(static_cast<std::size_t>(f.i), 1));
    auto evaluate = [&f](const CharVector& v) {
        ParamPoly acc;
        for (const auto& [j, coeff] : f.coeffs)
            acc += coeff * v.values.at(j);
        return acc;
    };

    for (const Partition& i_part : enumerate_partitions(f.i)) {
        if (i_part == ones)
            continue;
        ParamPoly value = evaluate(basis_char_vector_symbolic(i_part));
        if (!value.is_zero())
            return ClassifyResult{false, Rational(0), i_part, std::move(value)};
    }
    ParamPoly on_cp = evaluate(basis_char_vector(ones, GeneratorAssignment{}));
    return ClassifyResult{true, on_cp.constant_value(), Partition{}, {}};
}

/// Thom's argument makes L_i independent of the chosen nonzero constants;
/// re-solving under every assignment must give identical coefficients.
inline bool verify_independence(int i, const std::vector<GeneratorAssignment>& assignments) {
    if (assignments.size() < 2)
        throw std::invalid_argument("verify_independence: need at least 2 assignments");
    LGenusResult first = solve_l(i, assignments.front());
    for (std::size_t t = 1; t < assignments.size(); ++t)
        if (!(solve_l(i, assignments[t]) == first))
            return false;
    return true;
}

} // namespace pontcalc

#endif // PONTCALC_L_SOLVER_HPP
