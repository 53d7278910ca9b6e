#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "entgraph/errors.hpp"
#include "entgraph/gsd.hpp"
#include "entgraph/taxonomy.hpp"
#include "test_oracles.hpp"

using namespace entgraph;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState state_from(std::size_t dim, std::initializer_list<std::pair<int, double>> terms) {
    std::vector<cdouble> amps(dim, 0.0);
    for (const auto& [index, value] : terms) amps[index] = value;
    return normalize(amps);
}

EntangledGraph graph_with_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    EntangledGraph g;
    g.n = n;
    for (const auto& [i, j] : edges) g.edges[{i, j}] = 0.5;
    return g;
}

}  // namespace

TEST_CASE("factorization structure of product and partially-product states") {
    CHECK(factorization_structure(state_from(16, {{0b0101, 1.0}})) ==
          std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

    // (a|00> + l|11>) x |00>
    CHECK(factorization_structure(state_from(16, {{0, 0.6}, {12, 0.8}})) ==
          std::vector<std::vector<int>>{{1, 2}, {3}, {4}});

    // Bell(12) x Bell(34)
    const PureState pairpair =
        state_from(16, {{0, 0.5}, {3, 0.5}, {12, 0.5}, {15, 0.5}});
    CHECK(factorization_structure(pairpair) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

    // GHZ4 does not factor
    CHECK(factorization_structure(state_from(16, {{0, kInvSqrt2}, {15, kInvSqrt2}})) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4}});
}

TEST_CASE("graph construction from reports") {
    const PureState ghz = state_from(16, {{0, kInvSqrt2}, {15, kInvSqrt2}});
    const ClassReport ghz_report = classify(ghz);
    CHECK(ghz_report.graph.edges.empty());
    REQUIRE(ghz_report.graph.circles.size() == 1);
    CHECK(ghz_report.graph.circles[0].first == std::vector<int>{1, 2, 3, 4});

    const RepresentativeSpec wspec = RepresentativeSpec::create(
        ClassLabel::c2q, {{"alpha", 0.5}, {"zeta", 0.5}, {"eta", 0.5}, {"lambda", 0.5}});
    const ClassReport w_report = classify(build_representative(wspec));
    CHECK(w_report.graph.edges.size() == 6);
    REQUIRE(w_report.graph.circles.size() == 1);
    CHECK(w_report.graph.circles[0].first == std::vector<int>{1, 2, 3, 4});

    // |1> x GHZ3: no edges, circle over the pure triple
    const ClassReport bisep = classify(state_from(16, {{8, 0.6}, {15, 0.8}}));
    CHECK(bisep.graph.edges.empty());
    REQUIRE(bisep.graph.circles.size() == 1);
    CHECK(bisep.graph.circles[0].first == std::vector<int>{2, 3, 4});
    CHECK(bisep.graph.circles[0].second == doctest::Approx(0.96).epsilon(1e-12));
}

TEST_CASE("graph shapes on four vertices cover all eleven classes") {
    CHECK(graph_shape(graph_with_edges(4, {})).id == GraphShapeId::empty);
    CHECK(graph_shape(graph_with_edges(4, {{1, 2}})).id == GraphShapeId::one_edge);
    CHECK(graph_shape(graph_with_edges(4, {{1, 3}, {2, 3}})).id == GraphShapeId::two_adjacent);
    CHECK(graph_shape(graph_with_edges(4, {{1, 3}, {2, 4}})).id == GraphShapeId::two_disjoint);
    CHECK(graph_shape(graph_with_edges(4, {{2, 3}, {2, 4}, {3, 4}})).id == GraphShapeId::triangle);
    CHECK(graph_shape(graph_with_edges(4, {{1, 2}, {1, 3}, {1, 4}})).id == GraphShapeId::star);
    CHECK(graph_shape(graph_with_edges(4, {{1, 2}, {2, 3}, {3, 4}})).id == GraphShapeId::path3);
    CHECK(graph_shape(graph_with_edges(4, {{1, 2}, {1, 4}, {2, 3}, {2, 4}})).id ==
          GraphShapeId::paw);
    CHECK(graph_shape(graph_with_edges(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})).id ==
          GraphShapeId::cycle4);
    CHECK(graph_shape(graph_with_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})).id ==
          GraphShapeId::five_edge);
    CHECK(graph_shape(graph_with_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})).id ==
          GraphShapeId::complete);

    // every labelled graph on 4 vertices lands in one of the eleven ids
    std::set<GraphShapeId> seen;
    for (int mask = 0; mask < 64; ++mask) {
        EntangledGraph g;
        g.n = 4;
        int bit = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                if (mask & (1 << bit)) g.edges[{i, j}] = 1.0;
                ++bit;
            }
        seen.insert(graph_shape(g).id);
    }
    CHECK(seen.size() == 11);
}

TEST_CASE("graph shapes on three vertices") {
    CHECK(graph_shape(graph_with_edges(3, {})).id == GraphShapeId::empty);
    CHECK(graph_shape(graph_with_edges(3, {{1, 2}})).id == GraphShapeId::one_edge);
    CHECK(graph_shape(graph_with_edges(3, {{1, 2}, {2, 3}})).id == GraphShapeId::two_edge);
    CHECK(graph_shape(graph_with_edges(3, {{1, 2}, {1, 3}, {2, 3}})).id == GraphShapeId::triangle);
}

TEST_CASE("classification of the displayed representatives") {
    // alpha|0000> + kappa|1011> + mu|1101> + nu|1110> under the triangle
    // constraints lands in 2k
    const double k = std::sqrt(0.33);
    const double a = std::sqrt(1.0 - 3 * 0.33);
    const PureState tri = state_from(16, {{0, a}, {11, k}, {13, k}, {14, k}});
    const ClassReport tri_report = classify(tri);
    CHECK(tri_report.label == ClassLabel::c2k);
    CHECK(graph_shape(tri_report.graph).id == GraphShapeId::triangle);

    // alpha|0000> + zeta(|1001> + |1010> + |1100> + |1111>) is the star
    const double z = 0.35;
    const double alpha_l = std::sqrt(1.0 - 4 * z * z);
    const PureState star =
        state_from(16, {{0, alpha_l}, {9, z}, {10, z}, {12, z}, {15, z}});
    CHECK(classify(star).label == ClassLabel::c2l);

    // |1> x (e|000> + m|101> + n|110>) is biseparable with a full triple
    const PureState bisep =
        state_from(16, {{8, 0.6}, {13, 0.5}, {14, std::sqrt(1.0 - 0.36 - 0.25)}});
    CHECK(classify(bisep).label == ClassLabel::c2f);

    // alpha|000> + beta|100> + delta|110> + lambda|111> with generic
    // positive parameters is 1e
    const PureState chain = state_from(8, {{0, 0.5}, {4, 0.5}, {6, 0.5}, {7, 0.5}});
    CHECK(classify(chain).label == ClassLabel::c1e);

    // two-qubit labels
    CHECK(classify(normalize({1.0, 0.0, 0.0, 0.0})).label == ClassLabel::sep2);
    CHECK(classify(normalize({1.0, 0.0, 0.0, 1.0})).label == ClassLabel::ent2);
}

TEST_CASE("degenerate parameters collapse to the computed class") {
    // class 2e pattern with lambda = 0 is really a 2d state
    const PureState degenerate = state_from(16, {{8, 0.6}, {14, 0.48}, {15, 0.64}});
    CHECK(classify(degenerate).label == ClassLabel::c2d);
}

TEST_CASE("classification is invariant under local unitaries") {
    std::mt19937_64 rng(707);
    const std::vector<ClassLabel>& labels = representative_classes();
    for (int rep = 0; rep < 60; ++rep) {
        const ClassLabel label = labels[rep % labels.size()];
        const PureState psi = build_representative(sample(label, 900 + rep));
        std::vector<CMatrix> us;
        for (int q = 0; q < psi.n_qubits; ++q) us.push_back(oracle::random_unitary(rng));
        const ClassReport before = classify(psi);
        const ClassReport after = classify(apply_local_unitaries(psi, us));
        CHECK(to_string(before.label) == to_string(after.label));
    }
}

TEST_CASE("qubit relabeling permutes the graph and preserves the shape") {
    std::mt19937_64 rng(808);
    const std::vector<std::vector<int>> perms = {
        {2, 1, 3, 4}, {1, 3, 2, 4}, {4, 3, 2, 1}, {2, 3, 4, 1}, {3, 1, 4, 2}};
    const std::vector<ClassLabel> labels = {ClassLabel::c2h, ClassLabel::c2j, ClassLabel::c2k,
                                            ClassLabel::c2m, ClassLabel::c2n, ClassLabel::c2o,
                                            ClassLabel::c2p, ClassLabel::c2q};
    for (int rep = 0; rep < 40; ++rep) {
        const ClassLabel label = labels[rep % labels.size()];
        const PureState psi = build_representative(sample(label, 100 + rep));
        const std::vector<int>& perm = perms[rep % perms.size()];
        const PureState permuted = oracle::permute_qubits(psi, perm);

        const ClassReport before = classify(psi);
        const ClassReport after = classify(permuted);
        CHECK(graph_shape(before.graph).id == graph_shape(after.graph).id);

        // edge (i, j) of the original shows up between the relabeled vertices
        for (const auto& [pair, weight] : before.graph.edges) {
            int i = 0;
            int j = 0;
            for (int q = 1; q <= 4; ++q) {
                if (perm[q - 1] == pair.first) i = q;
                if (perm[q - 1] == pair.second) j = q;
            }
            if (i > j) std::swap(i, j);
            REQUIRE(after.graph.edges.count({i, j}) == 1);
            CHECK(after.graph.edges.at({i, j}) == doctest::Approx(weight).epsilon(1e-8));
        }
        CHECK(before.graph.edges.size() == after.graph.edges.size());
        (void)rng;
    }
}

TEST_CASE("2a exactly when every marginal is pure and all measures vanish") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const ClassLabel label = representative_classes()[seed % 24];
        if (class_label_qubits(label) != 4) continue;
        const PureState psi = build_representative(sample(label, seed));
        const ClassReport report = classify(psi);
        const DensityMatrix rho = density_of(psi);

        bool all_zero = report.measures.global <= kEdgeEps;
        for (const auto& [pair, value] : report.measures.pairwise) {
            (void)pair;
            all_zero = all_zero && value <= kEdgeEps;
        }
        bool all_pure = true;
        for (int q = 1; q <= 4; ++q)
            all_pure = all_pure && purity(partial_trace(rho, 4, QubitSet{q})) >= 1.0 - kPurityEps;

        CHECK((report.label == ClassLabel::c2a) == (all_zero && all_pure));
    }
}

TEST_CASE("class labels round-trip through their names") {
    for (const ClassLabel label : representative_classes())
        CHECK(class_label_from_string(to_string(label)) == label);
    CHECK(class_label_from_string("sep2") == ClassLabel::sep2);
    CHECK_THROWS_AS((void)class_label_from_string("9z"), Error);
}
