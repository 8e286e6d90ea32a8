// affine_solution.hpp -- an affine star enriched with its invariants
// (s, divisor labels, dimension, Coxeter number), plus the tau-product and
// the tau-primitivity test on arm multisets.

#pragma once

#include "starmat/bigint.hpp"
#include "starmat/coxeter.hpp"
#include "starmat/star_shape.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace starmat {

struct AffineSolution {
    StarShape shape;
    BigInt s;                  // lcm of the N_i = r_i + 1
    std::vector<BigInt> x;     // s / N_i, descending (table display order)
    BigInt dim;                // D = 1 + sum r_i
    BigInt h;                  // Coxeter number s (D+1) / 2

    BigInt p() const { return shape.p(); }
};

inline AffineSolution make_affine_solution(const StarShape& shape) {
    if (classify(shape) != MatrixClass::AffineType)
        throw std::domain_error("make_affine_solution: " + to_string(shape) + " is not affine");
    AffineSolution sol{shape, kernel_scale(shape), divisor_labels(shape), dimension(shape),
                       coxeter_number(shape)};
    // arms ascending makes the x_i descending already
    return sol;
}

// Table order: by dimension, then kernel scale, then ascending arm tuple.
inline bool solution_order(const AffineSolution& a, const AffineSolution& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.s != b.s) return a.s < b.s;
    return a.shape.arms() < b.shape.arms();
}

// Multiset union of arms; the p values add and the unit-fraction equation
// is preserved, so the result is affine by construction.
inline AffineSolution tau_product(const AffineSolution& a, const AffineSolution& b) {
    std::vector<BigInt> arms = a.shape.arms();
    arms.insert(arms.end(), b.shape.arms().begin(), b.shape.arms().end());
    const BigInt k = BigInt(arms.size()) - (a.p() + b.p());
    const StarShape shape(k, std::move(arms));
    if (classify(shape) != MatrixClass::AffineType)
        throw std::logic_error("tau_product: result failed the affine re-check");
    return make_affine_solution(shape);
}

// Splits the arm multiset into two parts whose unit-fraction sums are both
// positive integers, if any such split exists; otherwise the solution is
// tau-primitive. The search walks proper sub-multisets by size then
// lexicographic order, so the reported split is deterministic.
inline std::optional<std::pair<AffineSolution, AffineSolution>> tau_decompose(
    const AffineSolution& sol) {
    const std::vector<BigInt>& arms = sol.shape.arms();
    const std::size_t m = arms.size();
    if (sol.p() < 2) return std::nullopt;  // 1 cannot split into two positive integers

    std::vector<std::size_t> pick;
    // enumerate index subsets of a fixed size in lexicographic order,
    // skipping duplicate arm values at the same depth
    auto scan = [&](auto&& self, std::size_t size, std::size_t next) -> std::optional<std::vector<BigInt>> {
        if (pick.size() == size) {
            BigRat sum(0);
            for (std::size_t i : pick) sum += make_rat(1, arms[i] + 1);
            if (sum.get_den() == 1 && sum.get_num() >= 1) {
                std::vector<BigInt> part;
                for (std::size_t i : pick) part.push_back(arms[i]);
                return part;
            }
            return std::nullopt;
        }
        for (std::size_t i = next; i + (size - pick.size()) <= m; ++i) {
            if (i > next && arms[i] == arms[i - 1]) continue;
            pick.push_back(i);
            if (auto part = self(self, size, i + 1)) return part;
            pick.pop_back();
        }
        return std::nullopt;
    };

    for (std::size_t size = 2; size + 2 <= m; ++size) {
        pick.clear();
        if (auto part = scan(scan, size, 0)) {
            std::vector<BigInt> rest = arms;
            for (const BigInt& r : *part) {
                auto it = std::find(rest.begin(), rest.end(), r);
                rest.erase(it);
            }
            BigRat part_sum(0);
            for (const BigInt& r : *part) part_sum += make_rat(1, r + 1);
            const BigInt p1 = part_sum.get_num();
            const StarShape left(BigInt(part->size()) - p1, *part);
            const StarShape right(BigInt(rest.size()) - (sol.p() - p1), rest);
            return std::make_pair(make_affine_solution(left), make_affine_solution(right));
        }
    }
    return std::nullopt;
}

}  // namespace starmat
