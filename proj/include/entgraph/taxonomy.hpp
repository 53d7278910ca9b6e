#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entgraph/concurrence.hpp"
#include "entgraph/qcore.hpp"

namespace entgraph {

// Edges and circles below this weight are dropped from graphs.
inline constexpr double kEdgeEps = 1e-7;

// Weighted entangled graph: vertices are qubits, an edge carries the
// pairwise concurrence, a circle marks a subset with nonzero global
// entanglement (the full register, or a pure three-qubit factor).
struct EntangledGraph {
    int n = 0;
    std::map<std::pair<int, int>, double> edges;            // (i, j) with i < j
    std::vector<std::pair<std::vector<int>, double>> circles;
};

// Isomorphism class of the edge set, weights ignored.
enum class GraphShapeId {
    empty,
    one_edge,
    two_edge,       // 3 vertices only
    two_adjacent,   // 4 vertices
    two_disjoint,   // 4 vertices
    triangle,
    star,
    path3,
    paw,
    cycle4,
    five_edge,
    complete,
};

struct GraphShape {
    int n = 0;
    GraphShapeId id = GraphShapeId::empty;
};

const char* to_string(GraphShapeId id) noexcept;

enum class ClassLabel {
    sep2,
    ent2,
    c1a, c1b, c1c, c1d, c1e, c1f,
    c2a, c2b, c2c, c2d, c2e, c2f, c2g, c2h, c2i, c2j,
    c2k, c2l, c2m, c2n, c2o, c2p, c2q,
    c2x_pairpair,
};

std::string to_string(ClassLabel label);
// Parses labels like "1c", "2k", "2x-pairpair", "sep2". Throws
// errc::parse_error on anything else.
ClassLabel class_label_from_string(const std::string& text);
int class_label_qubits(ClassLabel label) noexcept;

struct ClassReport {
    ClassLabel label = ClassLabel::c2a;
    EntangledGraph graph;
    std::vector<std::vector<int>> factorization;  // disjoint blocks covering 1..n
    ConcurrenceReport measures;
};

struct ClassifyOptions {
    double edge_eps = kEdgeEps;
    double purity_eps = kPurityEps;
};

// Finest partition of the qubits into tensor factors, detected by marginal
// purity: singletons first, then pairs among the remainder.
std::vector<std::vector<int>> factorization_structure(const PureState& psi,
                                                      double purity_eps = kPurityEps);

// Edges for every pairwise concurrence above edge_eps; a circle over the
// full register when the global measure exceeds edge_eps, and one per
// reported pure triple likewise. Circles are only emitted inside a single
// factorization block.
EntangledGraph build_graph(const ConcurrenceReport& report,
                           const std::vector<std::vector<int>>& factorization,
                           double edge_eps = kEdgeEps);

GraphShape graph_shape(const EntangledGraph& g);

ClassReport classify(const PureState& psi, const ClassifyOptions& opts = {});

}  // namespace entgraph
