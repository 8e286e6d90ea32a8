// Star-shape model: matrix builder, closed forms, trichotomy, Coxeter
// labels, kernel verification, tau operations, general graph classifier.

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "starmat/starmat.hpp"

#include <random>
#include <vector>

using namespace starmat;

namespace {

// labels flattened in the matrix vertex order (arms first, center last)
std::vector<BigInt> kernel_vector(const CoxeterLabels& labels) {
    std::vector<BigInt> c;
    for (const auto& arm : labels.arms) c.insert(c.end(), arm.begin(), arm.end());
    c.push_back(labels.center);
    return c;
}

bool is_zero_product(const ExactMatrix& m, const std::vector<BigInt>& v) {
    REQUIRE(m.order() == v.size());
    for (std::size_t i = 0; i < m.order(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < m.order(); ++j) acc += m.at(i, j) * v[j];
        if (acc != 0) return false;
    }
    return true;
}

std::vector<StarShape> sample_shapes(int count, std::mt19937& rng) {
    std::uniform_int_distribution<long> k_dist(1, 6);
    std::uniform_int_distribution<std::size_t> m_dist(2, 5);
    std::uniform_int_distribution<long> r_dist(1, 9);
    std::vector<StarShape> shapes;
    for (int i = 0; i < count; ++i) {
        std::vector<BigInt> arms;
        const std::size_t m = m_dist(rng);
        for (std::size_t j = 0; j < m; ++j) arms.emplace_back(r_dist(rng));
        shapes.emplace_back(BigInt(k_dist(rng)), std::move(arms));
    }
    return shapes;
}

}  // namespace

TEST_CASE("StarShape canonicalizes and validates") {
    const StarShape s(2, {5, 1, 2});
    REQUIRE((s.arms() == std::vector<BigInt>{1, 2, 5}));
    REQUIRE(s.m() == 3);
    REQUIRE(s.p() == 1);
    REQUIRE_THROWS_AS(StarShape(0, {1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(StarShape(2, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(StarShape(2, {1, 0}), std::invalid_argument);
}

TEST_CASE("build_star_matrix block layout") {
    const ExactMatrix b111 = build_star_matrix(StarShape(1, {1, 1}));
    REQUIRE(b111 == ExactMatrix::from_rows({{2, 0, -1}, {0, 2, -1}, {-1, -1, 1}}));

    // a 2-armed star with center weight 2 is the A_3 path up to reordering
    const ExactMatrix b211 = build_star_matrix(StarShape(2, {1, 1}));
    REQUIRE(oracles::permuted(b211, {0, 2, 1}) == cartan_a(3));
    REQUIRE(char_poly(b211) == char_poly(cartan_a(3)));

    REQUIRE(build_star_matrix(StarShape(2, {1, 2, 5})).order() == 9);
    REQUIRE(build_star_matrix(StarShape(2, {1, 2, 5})).symmetric());
}

TEST_CASE("materialization threshold is an explicit error naming D") {
    const StarShape big(5, {1, 2, 6, 42, 1806, 3263441});
    try {
        build_star_matrix(big);
        FAIL("expected MaterializeError");
    } catch (const MaterializeError& e) {
        REQUIRE(e.dimension == dimension(big));
        REQUIRE(std::string(e.what()).find("3265299") != std::string::npos);
    }
    // override allows small shapes through tight thresholds to fail too
    REQUIRE_THROWS_AS(build_star_matrix(StarShape(2, {2, 2, 2}), 5), MaterializeError);
    REQUIRE_NOTHROW(build_star_matrix(StarShape(2, {2, 2, 2}), 7));
}

TEST_CASE("dimension, trace and entry sum closed forms") {
    REQUIRE(dimension(StarShape(2, {1, 2, 5})) == 9);
    REQUIRE(dimension(StarShape(3, {1, 2, 6, 41})) == 51);
    REQUIRE(entry_sum(StarShape(3, {1, 1})) == 3);

    std::mt19937 rng(23);
    for (const StarShape& shape : sample_shapes(40, rng)) {
        const ExactMatrix b = build_star_matrix(shape);
        REQUIRE(BigInt(b.order()) == dimension(shape));
        REQUIRE(b.trace() == trace(shape));
        REQUIRE(b.entry_sum() == entry_sum(shape));
    }
}

TEST_CASE("schur_scalar pinned values") {
    REQUIRE(schur_scalar(StarShape(2, {2, 2, 2})) == 0);
    REQUIRE(schur_scalar(StarShape(2, {1, 1})) == 1);
    REQUIRE(schur_scalar(StarShape(1, {2, 2, 2})) == -1);
}

TEST_CASE("determinant closed form agrees with the fraction-free oracle") {
    REQUIRE(determinant_closed(StarShape(2, {2, 2, 2})) == 0);
    REQUIRE(determinant_closed(StarShape(3, {1, 1})) == 8);
    REQUIRE(determinant_closed(StarShape(2, {1, 1})) == 4);

    // full small grid: m in {2,3}, k <= 4, arms <= 5
    for (long k = 1; k <= 4; ++k) {
        for (long r1 = 1; r1 <= 5; ++r1)
            for (long r2 = r1; r2 <= 5; ++r2) {
                const StarShape s2(k, {r1, r2});
                REQUIRE(determinant_closed(s2) == bareiss_determinant(build_star_matrix(s2)));
                for (long r3 = r2; r3 <= 5; ++r3) {
                    const StarShape s3(k, {r1, r2, r3});
                    REQUIRE(determinant_closed(s3) == bareiss_determinant(build_star_matrix(s3)));
                }
            }
    }
}

TEST_CASE("classify matches the inertia oracle on random shapes") {
    std::mt19937 rng(29);
    for (const StarShape& shape : sample_shapes(60, rng)) {
        const Inertia in = inertia_symmetric(build_star_matrix(shape));
        const std::size_t d = to_size(dimension(shape));
        switch (classify(shape)) {
            case MatrixClass::FiniteType: REQUIRE((in == Inertia{d, 0, 0})); break;
            case MatrixClass::AffineType: REQUIRE((in == Inertia{d - 1, 1, 0})); break;
            case MatrixClass::Indefinite: REQUIRE((in == Inertia{d - 1, 0, 1})); break;
        }
    }
    REQUIRE(classify(StarShape(2, {2, 2, 2})) == MatrixClass::AffineType);
    REQUIRE(classify(StarShape(3, {2, 2, 2})) == MatrixClass::FiniteType);
    REQUIRE(classify(StarShape(1, {2, 2, 2})) == MatrixClass::Indefinite);
}

TEST_CASE("coxeter_labels pinned examples") {
    const CoxeterLabels e8 = coxeter_labels(StarShape(2, {1, 2, 5}));
    REQUIRE(e8.center == 6);
    REQUIRE((e8.arms == std::vector<std::vector<BigInt>>{{3}, {2, 4}, {1, 2, 3, 4, 5}}));

    const CoxeterLabels d4 = coxeter_labels(StarShape(2, {1, 1, 1, 1}));
    REQUIRE(d4.center == 2);
    REQUIRE((d4.arms == std::vector<std::vector<BigInt>>{{1}, {1}, {1}, {1}}));

    const CoxeterLabels a1 = coxeter_labels(StarShape(1, {1, 1}));
    REQUIRE(a1.center == 2);
    REQUIRE((a1.arms == std::vector<std::vector<BigInt>>{{1}, {1}}));

    REQUIRE_THROWS_AS(coxeter_labels(StarShape(3, {1, 1})), std::domain_error);
}

TEST_CASE("coxeter_number pinned values and label-sum identity") {
    REQUIRE(coxeter_number(StarShape(2, {1, 2, 5})) == 30);
    REQUIRE(coxeter_number(StarShape(3, {1, 2, 6, 41})) == 1092);
    REQUIRE(coxeter_number(StarShape(1, {1, 1})) == 4);

    for (const StarShape& shape :
         {StarShape(2, {2, 2, 2}), StarShape(2, {1, 3, 3}), StarShape(3, {1, 2, 9, 14})}) {
        const CoxeterLabels labels = coxeter_labels(shape);
        BigInt sum = labels.center;
        for (const auto& arm : labels.arms)
            for (const BigInt& c : arm) sum += c;
        REQUIRE(sum == coxeter_number(shape));
    }
}

TEST_CASE("verify_kernel accepts real kernels and rejects perturbations") {
    const StarShape e6(2, {2, 2, 2});
    CoxeterLabels labels = coxeter_labels(e6);
    REQUIRE(verify_kernel(e6, labels));
    REQUIRE(is_zero_product(build_star_matrix(e6), kernel_vector(labels)));

    CoxeterLabels perturbed = coxeter_labels(StarShape(1, {1, 1}));
    perturbed.center = 3;
    REQUIRE_FALSE(verify_kernel(StarShape(1, {1, 1}), perturbed));

    CoxeterLabels wrong_arm = coxeter_labels(e6);
    wrong_arm.arms[1][0] += 1;
    REQUIRE_FALSE(verify_kernel(e6, wrong_arm));

    REQUIRE_THROWS_AS(verify_kernel(StarShape(2, {1, 2, 5}), labels), std::invalid_argument);
}

TEST_CASE("verify_kernel works symbolically at millions of vertices") {
    // greedy expansion 1 = 1/2 + 1/3 + 1/7 + 1/43 + 1/1807 + 1/3263442,
    // re-checked by exact summation before use
    const std::vector<BigInt> arms = {1, 2, 6, 42, 1806, 3263441};
    BigRat sum(0);
    for (const BigInt& r : arms) sum += make_rat(1, r + 1);
    REQUIRE(sum == 1);

    const StarShape greedy(5, arms);
    REQUIRE(classify(greedy) == MatrixClass::AffineType);
    REQUIRE(verify_kernel(greedy, coxeter_labels(greedy)));
}

TEST_CASE("kernel product is exactly zero for every materialized affine shape") {
    for (const StarShape& shape : {StarShape(2, {1, 1, 1, 1}), StarShape(2, {1, 3, 3}),
                                   StarShape(3, {1, 2, 6, 41}), StarShape(3, {1, 1, 1, 2, 5})}) {
        const CoxeterLabels labels = coxeter_labels(shape);
        REQUIRE(verify_kernel(shape, labels));
        REQUIRE(is_zero_product(build_star_matrix(shape), kernel_vector(labels)));
    }
}

TEST_CASE("tau_product unions arm multisets and adds p") {
    const AffineSolution a11 = make_affine_solution(StarShape(1, {1, 1}));
    const AffineSolution d4 = tau_product(a11, a11);
    REQUIRE((d4.shape.arms() == std::vector<BigInt>{1, 1, 1, 1}));
    REQUIRE(d4.shape.k() == 2);
    REQUIRE(d4.p() == 2);

    const AffineSolution e6 = make_affine_solution(StarShape(2, {2, 2, 2}));
    const AffineSolution mix = tau_product(a11, e6);
    REQUIRE((mix.shape.arms() == std::vector<BigInt>{1, 1, 2, 2, 2}));
    REQUIRE(mix.p() == 2);

    const AffineSolution e8 = make_affine_solution(StarShape(2, {1, 2, 5}));
    REQUIRE((tau_product(a11, e8).shape.arms() == std::vector<BigInt>{1, 1, 1, 2, 5}));
}

TEST_CASE("tau_decompose finds splits and certifies primitivity") {
    const AffineSolution e8 = make_affine_solution(StarShape(2, {1, 2, 5}));
    REQUIRE_FALSE(tau_decompose(e8).has_value());  // p = 1 can never split

    const auto d4_split = tau_decompose(make_affine_solution(StarShape(2, {1, 1, 1, 1})));
    REQUIRE(d4_split.has_value());
    REQUIRE((d4_split->first.shape.arms() == std::vector<BigInt>{1, 1}));
    REQUIRE((d4_split->second.shape.arms() == std::vector<BigInt>{1, 1}));

    const auto mixed = tau_decompose(make_affine_solution(StarShape(3, {1, 1, 1, 2, 5})));
    REQUIRE(mixed.has_value());
    REQUIRE((mixed->first.shape.arms() == std::vector<BigInt>{1, 1}));
    REQUIRE((mixed->second.shape.arms() == std::vector<BigInt>{1, 2, 5}));

    // verdicts agree with the bitmask oracle on the p = 2 tables
    for (std::size_t m : {5, 6}) {
        const EnumResult result = enumerate_affine(EnumQuery(m, 2));
        for (const AffineSolution& sol : result.solutions)
            REQUIRE(tau_decompose(sol).has_value() == oracles::brute_force_decomposable(sol));
    }
}

TEST_CASE("build_weighted_matrix matches the star builder on stars") {
    const StarShape shape(2, {1, 2, 5});
    REQUIRE(build_weighted_matrix(star_graph(shape)) == build_star_matrix(shape));

    const WeightedGraph single({2}, {});
    REQUIRE(build_weighted_matrix(single) == ExactMatrix::from_rows({{2}}));

    // 4-cycle with w == 2 is 2I - A(C4)
    const WeightedGraph c4({2, 2, 2, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    REQUIRE(build_weighted_matrix(c4) ==
            ExactMatrix::from_rows({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}));
}

TEST_CASE("classify_general handles stars, paths and cycles") {
    const auto star = classify_general(star_graph(StarShape(2, {2, 2, 2})));
    REQUIRE(star.type == MatrixClass::AffineType);
    REQUIRE(star.corank == 1);

    const WeightedGraph path3({2, 2, 2}, {{0, 1}, {1, 2}});
    REQUIRE(classify_general(path3).type == MatrixClass::FiniteType);

    const WeightedGraph c4({2, 2, 2, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto cycle = classify_general(c4);
    REQUIRE(cycle.type == MatrixClass::AffineType);
    REQUIRE((cycle.inertia == Inertia{3, 1, 0}));

    const auto indefinite = classify_general(star_graph(StarShape(1, {2, 2, 2})));
    REQUIRE(indefinite.type == MatrixClass::Indefinite);
    REQUIRE(indefinite.inertia.n_neg == 1);

    const WeightedGraph disconnected({2, 2}, {});
    REQUIRE_THROWS_AS(classify_general(disconnected), std::invalid_argument);
}

TEST_CASE("deleting any vertex of an affine star leaves a finite-type matrix") {
    const ExactMatrix b = build_star_matrix(StarShape(1, {1, 1}));
    for (std::size_t v = 0; v < b.order(); ++v)
        REQUIRE(inertia_symmetric(b.deleted(v)).positive_definite());
}

TEST_CASE("weighted graph validation") {
    REQUIRE_THROWS_AS(WeightedGraph({2, 2}, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(WeightedGraph({2, 2}, {{0, 1}, {1, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(WeightedGraph({2, 0}, {{0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(WeightedGraph({2, 2}, {{0, 5}}), std::invalid_argument);
}
