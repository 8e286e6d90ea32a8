// exact_matrix.hpp -- dense integer matrices and the exact linear-algebra
// oracles: fraction-free determinant, characteristic polynomial, inertia.
//
// These routines are oracle-grade: they make no use of the star structure
// of the matrices they are later fed, so they can independently check the
// closed forms derived for that family.

#pragma once

#include "starmat/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace starmat {

class ExactMatrix {
public:
    ExactMatrix() = default;

    explicit ExactMatrix(std::size_t order) : order_(order), a_(order * order) {}

    // Row-major construction, mostly for tests and small fixtures.
    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        ExactMatrix m(rows.size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.order_)
                throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
            std::size_t j = 0;
            for (long v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t order() const { return order_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * order_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * order_ + j]; }

    bool symmetric() const {
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    BigInt trace() const {
        BigInt t = 0;
        for (std::size_t i = 0; i < order_; ++i) t += at(i, i);
        return t;
    }

    BigInt entry_sum() const {
        BigInt t = 0;
        for (const BigInt& v : a_) t += v;
        return t;
    }

    // Principal submatrix with one row/column removed.
    ExactMatrix deleted(std::size_t v) const {
        if (v >= order_) throw std::invalid_argument("ExactMatrix::deleted: vertex out of range");
        ExactMatrix m(order_ - 1);
        for (std::size_t i = 0, ii = 0; i < order_; ++i) {
            if (i == v) continue;
            for (std::size_t j = 0, jj = 0; j < order_; ++j) {
                if (j == v) continue;
                m.at(ii, jj) = at(i, j);
                ++jj;
            }
            ++ii;
        }
        return m;
    }

    bool operator==(const ExactMatrix& o) const { return order_ == o.order_ && a_ == o.a_; }

private:
    std::size_t order_ = 0;
    std::vector<BigInt> a_;
};

// Type-A Cartan path matrix: 2 on the diagonal, -1 on the off-diagonals.
inline ExactMatrix cartan_a(std::size_t r) {
    ExactMatrix m(r);
    for (std::size_t i = 0; i < r; ++i) {
        m.at(i, i) = 2;
        if (i + 1 < r) {
            m.at(i, i + 1) = -1;
            m.at(i + 1, i) = -1;
        }
    }
    return m;
}

struct Inertia {
    std::size_t n_pos = 0;
    std::size_t n_zero = 0;
    std::size_t n_neg = 0;

    bool operator==(const Inertia&) const = default;

    bool positive_definite() const { return n_zero == 0 && n_neg == 0; }
};

inline std::string to_string(const Inertia& in) {
    return "(" + std::to_string(in.n_pos) + "," + std::to_string(in.n_zero) + "," +
           std::to_string(in.n_neg) + ")";
}

// Fraction-free Gaussian elimination (Bareiss). All intermediate values are
// minors of the (row-permuted) input, so the divisions are exact and nothing
// leaves the integers. The empty matrix has determinant 1.
inline BigInt bareiss_determinant(ExactMatrix m) {
    const std::size_t n = m.order();
    if (n == 0) return BigInt(1);

    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { pivot = i; break; }
            if (pivot == k) return BigInt(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m.at(k, k);
    }
    BigInt det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

// Monic characteristic polynomial det(xI - M), coefficients by ascending
// power (size order+1, leading coefficient 1).
//
// Faddeev-LeVerrier over the integers: M_0 = I, and for k = 1..n
//   c_{n-k} = -tr(M * M_{k-1}) / k,   M_k = M * M_{k-1} + c_{n-k} I.
// Each c is an integer (a signed sum of k x k principal minors), so the
// division by k is exact. Zero entries of M are skipped in the product,
// which makes the oracle cheap on tree-supported matrices.
inline std::vector<BigInt> char_poly(const ExactMatrix& m) {
    const std::size_t n = m.order();
    std::vector<BigInt> coeff(n + 1);
    coeff[n] = 1;
    if (n == 0) return coeff;

    std::vector<BigInt> mk(n * n), prod(n * n);
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] = 1;

    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigInt& acc = prod[i * n + j];
                acc = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    const BigInt& a = m.at(i, l);
                    if (a == 0) continue;
                    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), mk[l * n + j].get_mpz_t());
                }
            }
        }
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += prod[i * n + i];
        coeff[n - k] = divexact(-tr, BigInt(k));
        mk.swap(prod);
        for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += coeff[n - k];
    }
    return coeff;
}

// Sign variations of a coefficient sequence, zeros skipped. For a
// polynomial with only real roots this is Descartes' rule with equality.
inline std::size_t descartes_variations(const std::vector<BigInt>& coeff) {
    std::size_t variations = 0;
    int last = 0;
    for (const BigInt& c : coeff) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Eigenvalue sign counts of a symmetric integer matrix, computed from the
// characteristic polynomial: the zero count is the multiplicity of the root
// 0, and Descartes on the deflated polynomial is exact because symmetric
// matrices are real-rooted.
inline Inertia inertia_symmetric(const ExactMatrix& m) {
    if (!m.symmetric())
        throw std::invalid_argument("inertia_symmetric: matrix is not symmetric");
    const std::vector<BigInt> p = char_poly(m);

    std::size_t n_zero = 0;
    while (n_zero < m.order() && p[n_zero] == 0) ++n_zero;

    std::vector<BigInt> deflated(p.begin() + static_cast<std::ptrdiff_t>(n_zero), p.end());
    const std::size_t n_pos = descartes_variations(deflated);

    Inertia in;
    in.n_zero = n_zero;
    in.n_pos = n_pos;
    in.n_neg = m.order() - n_pos - n_zero;
    return in;
}

// Last diagonal entry of the inverse of the type-A Cartan matrix:
// (A_r^{-1})_{rr} = r / (r+1).
inline BigRat a_r_inverse_last(const BigInt& r) {
    if (r < 1) throw std::domain_error("a_r_inverse_last: requires r >= 1");
    return make_rat(r, r + 1);
}

}  // namespace starmat
