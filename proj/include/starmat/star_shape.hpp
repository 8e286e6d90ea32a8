// star_shape.hpp -- the weighted star family B(k; r_1,...,r_m): compact
// shape model, matrix builder, closed-form determinant, and the Schur-scalar
// trichotomy.
//
// The shape, not the matrix, is the canonical object: affine solutions reach
// dimensions in the millions, far beyond dense materialization, and every
// invariant at that scale has a closed form in (k, r_1..r_m).

#pragma once

#include "starmat/bigint.hpp"
#include "starmat/exact_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace starmat {

inline constexpr std::size_t kDefaultMaterializeThreshold = 10000;

// Central weight k >= 1 plus a non-decreasing multiset of arm lengths
// r_i >= 1, m >= 2. Arms are kept sorted ascending; the classification is
// of unordered stars, so the sorted tuple is the identity.
class StarShape {
public:
    StarShape(BigInt k, std::vector<BigInt> arms) : k_(std::move(k)), arms_(std::move(arms)) {
        if (k_ < 1) throw std::invalid_argument("StarShape: central weight k must be >= 1");
        if (arms_.size() < 2) throw std::invalid_argument("StarShape: need at least m = 2 arms");
        for (const BigInt& r : arms_)
            if (r < 1) throw std::invalid_argument("StarShape: arm lengths must be >= 1");
        std::sort(arms_.begin(), arms_.end());
    }

    const BigInt& k() const { return k_; }
    const std::vector<BigInt>& arms() const { return arms_; }
    std::size_t m() const { return arms_.size(); }

    // p = m - k; affine shapes have p >= 1.
    BigInt p() const { return BigInt(arms_.size()) - k_; }

    bool operator==(const StarShape& o) const { return k_ == o.k_ && arms_ == o.arms_; }

private:
    BigInt k_;
    std::vector<BigInt> arms_;
};

enum class MatrixClass { FiniteType, AffineType, Indefinite };

inline std::string to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::FiniteType: return "finite";
        case MatrixClass::AffineType: return "affine";
        case MatrixClass::Indefinite: return "indefinite";
    }
    return "?";
}

// D = 1 + sum r_i.
inline BigInt dimension(const StarShape& shape) {
    BigInt d = 1;
    for (const BigInt& r : shape.arms()) d += r;
    return d;
}

// tr B = 2 sum r_i + k.
inline BigInt trace(const StarShape& shape) {
    BigInt t = shape.k();
    for (const BigInt& r : shape.arms()) t += 2 * r;
    return t;
}

// Total entry sum of B; all the -1 couplings cancel the arm 2's, leaving k.
inline BigInt entry_sum(const StarShape& shape) { return shape.k(); }

// The scalar Schur complement S = k - m + sum 1/(r_i + 1). Its sign alone
// decides the finite / affine / indefinite trichotomy.
inline BigRat schur_scalar(const StarShape& shape) {
    BigRat s(shape.k() - BigInt(shape.m()));
    for (const BigInt& r : shape.arms()) s += make_rat(1, r + 1);
    return s;
}

// det B = prod (r_i + 1) * S; the product clears every denominator of S.
inline BigInt determinant_closed(const StarShape& shape) {
    BigRat det = schur_scalar(shape);
    for (const BigInt& r : shape.arms()) det *= BigRat(r + 1);
    if (det.get_den() != 1)
        throw std::logic_error("determinant_closed: non-integral result");
    return det.get_num();
}

inline MatrixClass classify(const StarShape& shape) {
    const int s = sgn(schur_scalar(shape));
    if (s > 0) return MatrixClass::FiniteType;
    if (s == 0) return MatrixClass::AffineType;
    return MatrixClass::Indefinite;  // exactly one negative eigenvalue
}

// "B(k;r1,...,rm)" (ascending arms).
inline std::string to_string(const StarShape& shape) {
    std::string s = "B(" + to_string(shape.k()) + ";";
    for (std::size_t i = 0; i < shape.arms().size(); ++i) {
        if (i) s += ",";
        s += to_string(shape.arms()[i]);
    }
    return s + ")";
}

struct MaterializeError : std::runtime_error {
    MaterializeError(const BigInt& dim, std::size_t threshold)
        : std::runtime_error("star matrix of dimension D = " + dim.get_str() +
                             " is too large to materialize (threshold " +
                             std::to_string(threshold) + ")"),
          dimension(dim) {}
    BigInt dimension;
};

// Dense order-D matrix in the block layout: A_{r_1}, ..., A_{r_m} on the
// diagonal, -1 coupling the last vertex of each arm to the center, center
// diagonal k. Vertex order is arm 1 root-to-center, ..., arm m, center last;
// tests that compare against hand-written matrices rely on exactly this.
inline ExactMatrix build_star_matrix(const StarShape& shape,
                                     std::size_t threshold = kDefaultMaterializeThreshold) {
    const BigInt dim = dimension(shape);
    if (dim > static_cast<unsigned long>(threshold)) throw MaterializeError(dim, threshold);

    const std::size_t n = to_size(dim);
    const std::size_t center = n - 1;
    ExactMatrix b(n);
    std::size_t base = 0;
    for (const BigInt& arm : shape.arms()) {
        const std::size_t r = to_size(arm);
        for (std::size_t j = 0; j < r; ++j) {
            b.at(base + j, base + j) = 2;
            if (j + 1 < r) {
                b.at(base + j, base + j + 1) = -1;
                b.at(base + j + 1, base + j) = -1;
            }
        }
        b.at(base + r - 1, center) = -1;
        b.at(center, base + r - 1) = -1;
        base += r;
    }
    b.at(center, center) = shape.k();
    return b;
}

}  // namespace starmat
