// weighted_graph.hpp -- vertex-weighted simple graphs, their Cartan-type
// matrices, and the finite / affine / indefinite test for arbitrary
// connected supports (not just stars).

#pragma once

#include "starmat/bigint.hpp"
#include "starmat/exact_matrix.hpp"
#include "starmat/star_shape.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace starmat {

class WeightedGraph {
public:
    WeightedGraph(std::vector<BigInt> weights, std::vector<std::pair<std::size_t, std::size_t>> edges)
        : weights_(std::move(weights)) {
        for (const BigInt& w : weights_)
            if (w < 1) throw std::invalid_argument("WeightedGraph: weights must be positive");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("WeightedGraph: loops are not allowed");
            if (u >= weights_.size() || v >= weights_.size())
                throw std::invalid_argument("WeightedGraph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second)
                throw std::invalid_argument("WeightedGraph: duplicate edge");
            edges_.push_back({u, v});
        }
    }

    std::size_t order() const { return weights_.size(); }
    const std::vector<BigInt>& weights() const { return weights_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    bool connected() const {
        const std::size_t n = order();
        if (n == 0) return false;
        std::vector<std::vector<std::size_t>> adj(n);
        for (auto [u, v] : edges_) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
        }
        return reached == n;
    }

private:
    std::vector<BigInt> weights_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Diagonal = vertex weights, -1 on edges, 0 otherwise.
inline ExactMatrix build_weighted_matrix(const WeightedGraph& g) {
    ExactMatrix b(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) b.at(i, i) = g.weights()[i];
    for (auto [u, v] : g.edges()) {
        b.at(u, v) = -1;
        b.at(v, u) = -1;
    }
    return b;
}

// The star B(k; r_1,...,r_m) as a weighted graph, in the same vertex order
// as build_star_matrix (arms first, center last).
inline WeightedGraph star_graph(const StarShape& shape) {
    const std::size_t n = to_size(dimension(shape));
    const std::size_t center = n - 1;
    std::vector<BigInt> weights(n, BigInt(2));
    weights[center] = shape.k();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t base = 0;
    for (const BigInt& arm : shape.arms()) {
        const std::size_t r = to_size(arm);
        for (std::size_t j = 0; j + 1 < r; ++j) edges.push_back({base + j, base + j + 1});
        edges.push_back({base + r - 1, center});
        base += r;
    }
    return WeightedGraph(std::move(weights), std::move(edges));
}

struct GeneralClassification {
    MatrixClass type;
    Inertia inertia;       // of the full matrix
    std::size_t corank;    // = inertia.n_zero
};

// Finite iff positive definite; affine iff positive semidefinite of corank
// one AND every one-vertex-deleted principal submatrix is positive definite
// (which suffices for all proper principal submatrices, since principal
// submatrices of positive-definite matrices are positive definite);
// everything else is indefinite, with the negative count reported.
inline GeneralClassification classify_general(const WeightedGraph& g) {
    if (!g.connected())
        throw std::invalid_argument("classify_general: graph must be connected");
    const ExactMatrix b = build_weighted_matrix(g);
    const Inertia in = inertia_symmetric(b);

    GeneralClassification result{MatrixClass::Indefinite, in, in.n_zero};
    if (in.positive_definite()) {
        result.type = MatrixClass::FiniteType;
    } else if (in.n_neg == 0 && in.n_zero == 1) {
        bool all_pd = true;
        for (std::size_t v = 0; v < g.order() && all_pd; ++v)
            all_pd = inertia_symmetric(b.deleted(v)).positive_definite();
        if (all_pd) result.type = MatrixClass::AffineType;
    }
    return result;
}

}  // namespace starmat
