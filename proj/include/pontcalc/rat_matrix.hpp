#ifndef PONTCALC_RAT_MATRIX_HPP
#define PONTCALC_RAT_MATRIX_HPP

#include "pontcalc/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pontcalc {

/// Thrown when an exact solve meets a singular matrix. For the L-genus
/// system this signals a violated basis assumption and must never be
/// silently regularized.
class SingularMatrixError : public std::domain_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::vector<Rational> mul_vector(const std::vector<Rational>& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("RatMatrix: size mismatch in mul_vector");
        std::vector<Rational> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                y[r] += at(r, c) * x[c];
        return y;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Solves Ax = b exactly by Gaussian elimination with rational pivoting
/// (largest numerator magnitude in the pivot column). A must be square and
/// nonsingular; throws SingularMatrixError otherwise.
inline std::vector<Rational> linear_solve(RatMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw std::invalid_argument("linear_solve: matrix not square");
    if (b.size() != n)
        throw std::invalid_argument("linear_solve: rhs size mismatch");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (a.at(r, col).is_zero())
                continue;
            if (pivot == n || boost::multiprecision::abs(a.at(r, col).numerator()) >
                                  boost::multiprecision::abs(a.at(pivot, col).numerator()))
                pivot = r;
        }
        if (pivot == n)
            throw SingularMatrixError("linear_solve: singular matrix at column " +
                                      std::to_string(col));
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a.at(pivot, c), a.at(col, c));
            std::swap(b[pivot], b[col]);
        }
        const Rational inv_p = Rational(1) / a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero())
                continue;
            const Rational f = a.at(r, col) * inv_p;
            a.at(r, col) = Rational(0);
            for (std::size_t c = col + 1; c < n; ++c)
                a.at(r, c) -= f * a.at(col, c);
            b[r] -= f * b[col];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            s -= a.at(i, c) * x[c];
        x[i] = s / a.at(i, i);
    }
    return x;
}

} // namespace pontcalc

#endif // PONTCALC_RAT_MATRIX_HPP
