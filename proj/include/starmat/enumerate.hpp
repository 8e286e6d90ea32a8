// enumerate.hpp -- complete enumeration of affine weighted stars for fixed
// (m, p) as a depth-first search over unit-fraction denominators
// 2 <= N_1 <= ... <= N_m with sum 1/N_i = p.
//
// At every frame the residual rho is an exact rational and the next
// denominator is confined to [max(2, N_prev, ceil(1/rho)), floor(t/rho)],
// which keeps the search finite with no denominator cap.

#pragma once

#include "starmat/affine_solution.hpp"
#include "starmat/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starmat {

struct EnumQuery {
    std::size_t m = 0;                  // term count, >= 2
    BigInt p = 0;                       // target integer, >= 1
    std::optional<BigInt> d_max;        // keep only solutions with D <= d_max
    std::optional<std::size_t> limit;   // cap on the returned list
    bool count_only = false;

    EnumQuery(std::size_t m_, BigInt p_) : m(m_), p(std::move(p_)) {
        if (m < 2) throw std::invalid_argument("EnumQuery: need m >= 2 terms");
        if (p < 1) throw std::invalid_argument("EnumQuery: need p >= 1 (p <= 0 is not an affine query)");
    }
};

struct EnumResult {
    std::vector<AffineSolution> solutions;  // sorted by (D, s, arms), d_max/limit applied
    BigInt total = 0;                       // untruncated solution count
    std::string diagnostic;                 // set for infeasible queries
};

// Admissible range for the next denominator: lo = max(2, n_prev, ceil(1/rho)),
// hi = floor(t/rho). An empty range (lo > hi) prunes the branch.
inline std::pair<BigInt, BigInt> denominator_bounds(const BigRat& rho, const BigInt& t,
                                                    const BigInt& n_prev) {
    if (sgn(rho) <= 0) throw std::invalid_argument("denominator_bounds: residual must be positive");
    if (t < 1) throw std::invalid_argument("denominator_bounds: need at least one remaining term");
    BigInt lo = ceil_div(rho.get_den(), rho.get_num());
    if (lo < 2) lo = 2;
    if (lo < n_prev) lo = n_prev;
    const BigInt hi = floor_div(t * rho.get_den(), rho.get_num());
    return {lo, hi};
}

namespace detail {

// One DFS level: chosen prefixends at n_prev, rho is the exact remaining
// sum, t terms still to place.
inline void enumerate_denominators(const BigRat& rho, const BigInt& t, const BigInt& n_prev,
                                   std::vector<BigInt>& prefix,
                                   const std::function<void(const std::vector<BigInt>&)>& emit) {
    if (t == 1) {
        // last term forced: rho itself must be a unit fraction 1/N with N >= lo
        if (rho.get_num() == 1 && rho.get_den() >= 2 && rho.get_den() >= n_prev) {
            prefix.push_back(rho.get_den());
            emit(prefix);
            prefix.pop_back();
        }
        return;
    }
    const auto [lo, hi] = denominator_bounds(rho, t, n_prev);
    BigRat next_rho;
    for (BigInt n = lo; n <= hi; ++n) {
        next_rho = rho - make_rat(1, n);
        if (sgn(next_rho) <= 0) continue;  // nothing positive left for the remaining terms
        prefix.push_back(n);
        enumerate_denominators(next_rho, t - 1, n, prefix, emit);
        prefix.pop_back();
    }
}

}  // namespace detail

// All solutions of sum 1/N_i = p with 2 <= N_1 <= ... <= N_m, converted to
// affine stars (r_i = N_i - 1, k = m - p) and sorted by (D, s, arms).
// Infeasible queries (p > m/2) return zero solutions with a diagnostic.
inline EnumResult enumerate_affine(const EnumQuery& q) {
    EnumResult result;
    if (2 * q.p > BigInt(q.m)) {
        result.diagnostic = "infeasible: p = " + to_string(q.p) + " exceeds m/2 = " +
                            std::to_string(q.m) + "/2 (each unit fraction is at most 1/2)";
        return result;
    }

    std::vector<BigInt> prefix;
    prefix.reserve(q.m);
    auto emit = [&](const std::vector<BigInt>& denominators) {
        result.total += 1;
        if (q.count_only) return;
        std::vector<BigInt> arms;
        arms.reserve(denominators.size());
        for (const BigInt& n : denominators) arms.push_back(n - 1);
        AffineSolution sol = make_affine_solution(StarShape(BigInt(q.m) - q.p, std::move(arms)));
        if (q.d_max && sol.dim > *q.d_max) return;
        result.solutions.push_back(std::move(sol));
    };
    detail::enumerate_denominators(BigRat(q.p), BigInt(q.m), BigInt(2), prefix, emit);

    std::sort(result.solutions.begin(), result.solutions.end(), solution_order);
    if (q.limit && result.solutions.size() > *q.limit) result.solutions.resize(*q.limit);
    return result;
}

inline BigInt count_affine(std::size_t m, const BigInt& p) {
    EnumQuery q(m, p);
    q.count_only = true;
    return enumerate_affine(q).total;
}

}  // namespace starmat
