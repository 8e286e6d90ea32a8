// coxeter.hpp -- primitive positive kernel vector of an affine star and the
// identities attached to it.
//
// For an affine shape with denominators N_i = r_i + 1 and s = lcm(N_i), the
// kernel vector is center label s and arm labels c_{i,j} = (s/N_i) j. The
// recurrences checked by verify_kernel are the rows of B c = 0 written out,
// so the check works at any dimension without materializing the matrix.

#pragma once

#include "starmat/bigint.hpp"
#include "starmat/star_shape.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace starmat {

struct CoxeterLabels {
    BigInt center;                           // = s for constructed labels
    std::vector<std::vector<BigInt>> arms;   // c_{i,1}, ..., c_{i,r_i}
};

// s = lcm(r_i + 1).
inline BigInt kernel_scale(const StarShape& shape) {
    BigInt s = 1;
    for (const BigInt& r : shape.arms()) s = big_lcm(s, r + 1);
    return s;
}

// Divisor labels x_i = s / N_i, one per arm (ascending arms give descending
// x); sum x_i = p s and each x_i divides s.
inline std::vector<BigInt> divisor_labels(const StarShape& shape) {
    const BigInt s = kernel_scale(shape);
    std::vector<BigInt> x;
    x.reserve(shape.m());
    for (const BigInt& r : shape.arms()) x.push_back(divexact(s, r + 1));
    return x;
}

inline CoxeterLabels coxeter_labels(const StarShape& shape) {
    if (classify(shape) != MatrixClass::AffineType)
        throw std::domain_error("coxeter_labels: " + to_string(shape) + " is not affine");
    CoxeterLabels labels;
    labels.center = kernel_scale(shape);
    labels.arms.reserve(shape.m());
    for (const BigInt& r : shape.arms()) {
        const BigInt x = divexact(labels.center, r + 1);
        std::vector<BigInt> arm;
        arm.reserve(to_size(r));
        for (BigInt j = 1; j <= r; ++j) arm.push_back(x * j);
        labels.arms.push_back(std::move(arm));
    }
    return labels;
}

// Coxeter number h = s (D+1) / 2, the sum of all labels including the
// center. The division is exact: if s is odd every N_i is odd, so every r_i
// is even and D is odd.
inline BigInt coxeter_number(const StarShape& shape) {
    if (classify(shape) != MatrixClass::AffineType)
        throw std::domain_error("coxeter_number: " + to_string(shape) + " is not affine");
    return divexact(kernel_scale(shape) * (dimension(shape) + 1), BigInt(2));
}

// True iff the given labels solve B c = 0, checked row by row:
// every arm satisfies 2 c_{i,j} - c_{i,j-1} - c_{i,j+1} = 0 with c_{i,0} = 0
// and c_{i,r_i+1} = center, and the center row gives
// k * center - sum_i c_{i,r_i} = 0.
inline bool verify_kernel(const StarShape& shape, const CoxeterLabels& labels) {
    if (labels.arms.size() != shape.m())
        throw std::invalid_argument("verify_kernel: arm count mismatch");
    for (std::size_t i = 0; i < shape.m(); ++i)
        if (BigInt(labels.arms[i].size()) != shape.arms()[i])
            throw std::invalid_argument("verify_kernel: arm length mismatch");

    BigInt tip_sum = 0;
    BigInt row;
    for (const std::vector<BigInt>& arm : labels.arms) {
        const std::size_t r = arm.size();
        for (std::size_t j = 0; j < r; ++j) {
            row = 2 * arm[j];
            if (j > 0) row -= arm[j - 1];
            row -= (j + 1 < r) ? arm[j + 1] : labels.center;
            if (row != 0) return false;
        }
        tip_sum += arm[r - 1];
    }
    return shape.k() * labels.center - tip_sum == 0;
}

}  // namespace starmat
