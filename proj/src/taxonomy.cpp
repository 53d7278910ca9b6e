#include "entgraph/taxonomy.hpp"

#include <algorithm>
#include <array>

#include "entgraph/errors.hpp"

namespace entgraph {

const char* to_string(GraphShapeId id) noexcept {
    switch (id) {
        case GraphShapeId::empty: return "empty";
        case GraphShapeId::one_edge: return "one-edge";
        case GraphShapeId::two_edge: return "two-edge";
        case GraphShapeId::two_adjacent: return "two-adjacent";
        case GraphShapeId::two_disjoint: return "two-disjoint";
        case GraphShapeId::triangle: return "triangle";
        case GraphShapeId::star: return "star";
        case GraphShapeId::path3: return "path3";
        case GraphShapeId::paw: return "paw";
        case GraphShapeId::cycle4: return "cycle4";
        case GraphShapeId::five_edge: return "five-edge";
        case GraphShapeId::complete: return "complete";
    }
    return "?";
}

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::sep2: return "sep2";
        case ClassLabel::ent2: return "ent2";
        case ClassLabel::c1a: return "1a";
        case ClassLabel::c1b: return "1b";
        case ClassLabel::c1c: return "1c";
        case ClassLabel::c1d: return "1d";
        case ClassLabel::c1e: return "1e";
        case ClassLabel::c1f: return "1f";
        case ClassLabel::c2a: return "2a";
        case ClassLabel::c2b: return "2b";
        case ClassLabel::c2c: return "2c";
        case ClassLabel::c2d: return "2d";
        case ClassLabel::c2e: return "2e";
        case ClassLabel::c2f: return "2f";
        case ClassLabel::c2g: return "2g";
        case ClassLabel::c2h: return "2h";
        case ClassLabel::c2i: return "2i";
        case ClassLabel::c2j: return "2j";
        case ClassLabel::c2k: return "2k";
        case ClassLabel::c2l: return "2l";
        case ClassLabel::c2m: return "2m";
        case ClassLabel::c2n: return "2n";
        case ClassLabel::c2o: return "2o";
        case ClassLabel::c2p: return "2p";
        case ClassLabel::c2q: return "2q";
        case ClassLabel::c2x_pairpair: return "2x-pairpair";
    }
    return "?";
}

ClassLabel class_label_from_string(const std::string& text) {
    static const std::array<ClassLabel, 26> all = {
        ClassLabel::sep2, ClassLabel::ent2,
        ClassLabel::c1a, ClassLabel::c1b, ClassLabel::c1c, ClassLabel::c1d, ClassLabel::c1e,
        ClassLabel::c1f,
        ClassLabel::c2a, ClassLabel::c2b, ClassLabel::c2c, ClassLabel::c2d, ClassLabel::c2e,
        ClassLabel::c2f, ClassLabel::c2g, ClassLabel::c2h, ClassLabel::c2i, ClassLabel::c2j,
        ClassLabel::c2k, ClassLabel::c2l, ClassLabel::c2m, ClassLabel::c2n, ClassLabel::c2o,
        ClassLabel::c2p, ClassLabel::c2q, ClassLabel::c2x_pairpair,
    };
    for (ClassLabel label : all)
        if (to_string(label) == text) return label;
    raise(errc::parse_error, "unknown class label '" + text + "'");
}

int class_label_qubits(ClassLabel label) noexcept {
    const std::string s = to_string(label);
    if (s == "sep2" || s == "ent2") return 2;
    return s[0] == '1' ? 3 : 4;
}

std::vector<std::vector<int>> factorization_structure(const PureState& psi, double purity_eps) {
    if (psi.n_qubits < 2 || psi.n_qubits > 4)
        raise(errc::bad_dimension, "factorization covers 2, 3 or 4 qubits");
    const int n = psi.n_qubits;
    const DensityMatrix rho = density_of(psi);
    auto is_pure = [&](const QubitSet& subset) {
        return purity(partial_trace(rho, n, subset)) >= 1.0 - purity_eps;
    };

    std::vector<std::vector<int>> blocks;
    std::vector<int> remainder;
    for (int q = 1; q <= n; ++q) {
        if (is_pure(QubitSet{q})) {
            blocks.push_back({q});
        } else {
            remainder.push_back(q);
        }
    }
    // Pairs among the leftover qubits; a hit removes both. Two pure pairs
    // sharing a qubit would force that qubit pure, so greedy is safe.
    std::vector<int> rest;
    while (remainder.size() >= 2) {
        bool found = false;
        for (std::size_t b = 1; b < remainder.size() && !found; ++b) {
            const std::vector<int> pair = {remainder[0], remainder[b]};
            if (static_cast<int>(pair.size()) < n && is_pure(QubitSet(pair))) {
                blocks.push_back(pair);
                remainder.erase(remainder.begin() + static_cast<std::ptrdiff_t>(b));
                remainder.erase(remainder.begin());
                found = true;
            }
        }
        if (!found) break;
    }
    if (!remainder.empty()) blocks.push_back(remainder);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

namespace {

bool subset_within_one_block(const std::vector<int>& subset,
                             const std::vector<std::vector<int>>& factorization) {
    for (const auto& block : factorization) {
        if (std::includes(block.begin(), block.end(), subset.begin(), subset.end())) return true;
    }
    return false;
}

}  // namespace

EntangledGraph build_graph(const ConcurrenceReport& report,
                           const std::vector<std::vector<int>>& factorization, double edge_eps) {
    EntangledGraph g;
    g.n = report.n_qubits;
    for (const auto& [pair, weight] : report.pairwise) {
        if (weight > edge_eps) g.edges[pair] = weight;
    }
    for (const auto& [triple, value] : report.triples) {
        if (value > edge_eps && subset_within_one_block(triple, factorization))
            g.circles.emplace_back(triple, value);
    }
    if (report.n_qubits >= 3 && report.global > edge_eps) {
        std::vector<int> all;
        for (int q = 1; q <= report.n_qubits; ++q) all.push_back(q);
        if (subset_within_one_block(all, factorization)) g.circles.emplace_back(all, report.global);
    }
    std::sort(g.circles.begin(), g.circles.end());
    return g;
}

GraphShape graph_shape(const EntangledGraph& g) {
    if (g.n != 3 && g.n != 4) raise(errc::bad_dimension, "graph shapes cover 3 or 4 vertices");

    auto has_edge = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return g.edges.count({i, j}) > 0;
    };
    auto contains_triangle = [&]() {
        for (int i = 1; i <= g.n; ++i)
            for (int j = i + 1; j <= g.n; ++j)
                for (int k = j + 1; k <= g.n; ++k)
                    if (has_edge(i, j) && has_edge(j, k) && has_edge(i, k)) return true;
        return false;
    };
    auto max_degree = [&]() {
        int best = 0;
        for (int v = 1; v <= g.n; ++v) {
            int d = 0;
            for (int u = 1; u <= g.n; ++u)
                if (u != v && has_edge(u, v)) ++d;
            best = std::max(best, d);
        }
        return best;
    };

    const int m = static_cast<int>(g.edges.size());
    GraphShape shape;
    shape.n = g.n;
    if (g.n == 3) {
        switch (m) {
            case 0: shape.id = GraphShapeId::empty; break;
            case 1: shape.id = GraphShapeId::one_edge; break;
            case 2: shape.id = GraphShapeId::two_edge; break;
            default: shape.id = GraphShapeId::triangle; break;
        }
        return shape;
    }

    switch (m) {
        case 0:
            shape.id = GraphShapeId::empty;
            break;
        case 1:
            shape.id = GraphShapeId::one_edge;
            break;
        case 2:
            shape.id = max_degree() == 2 ? GraphShapeId::two_adjacent : GraphShapeId::two_disjoint;
            break;
        case 3:
            if (max_degree() == 3) {
                shape.id = GraphShapeId::star;
            } else if (contains_triangle()) {
                shape.id = GraphShapeId::triangle;
            } else {
                shape.id = GraphShapeId::path3;
            }
            break;
        case 4:
            shape.id = contains_triangle() ? GraphShapeId::paw : GraphShapeId::cycle4;
            break;
        case 5:
            shape.id = GraphShapeId::five_edge;
            break;
        default:
            shape.id = GraphShapeId::complete;
            break;
    }
    return shape;
}

namespace {

int edges_within(const EntangledGraph& g, const std::vector<int>& block) {
    int count = 0;
    for (const auto& [pair, weight] : g.edges) {
        (void)weight;
        const bool a = std::find(block.begin(), block.end(), pair.first) != block.end();
        const bool b = std::find(block.begin(), block.end(), pair.second) != block.end();
        if (a && b) ++count;
    }
    return count;
}

ClassLabel classify3(const std::vector<std::vector<int>>& blocks, const EntangledGraph& graph) {
    if (blocks.size() == 3) return ClassLabel::c1a;
    if (blocks.size() == 2) return ClassLabel::c1b;
    switch (graph.edges.size()) {
        case 0: return ClassLabel::c1c;
        case 1: return ClassLabel::c1d;
        case 2: return ClassLabel::c1e;
        default: return ClassLabel::c1f;
    }
}

ClassLabel classify4(const std::vector<std::vector<int>>& blocks, const EntangledGraph& graph) {
    if (blocks.size() == 4) return ClassLabel::c2a;
    if (blocks.size() == 3) return ClassLabel::c2b;  // pair + two singletons
    if (blocks.size() == 2) {
        const std::size_t big = std::max(blocks[0].size(), blocks[1].size());
        if (big == 2) return ClassLabel::c2x_pairpair;
        // triple + singleton: subclass by the triple's internal edge count
        const auto& triple = blocks[0].size() == 3 ? blocks[0] : blocks[1];
        switch (edges_within(graph, triple)) {
            case 0: return ClassLabel::c2c;
            case 1: return ClassLabel::c2d;
            case 2: return ClassLabel::c2e;
            default: return ClassLabel::c2f;
        }
    }
    switch (graph_shape(graph).id) {
        case GraphShapeId::empty: return ClassLabel::c2g;
        case GraphShapeId::one_edge: return ClassLabel::c2h;
        case GraphShapeId::two_adjacent: return ClassLabel::c2i;
        case GraphShapeId::two_disjoint: return ClassLabel::c2j;
        case GraphShapeId::triangle: return ClassLabel::c2k;
        case GraphShapeId::star: return ClassLabel::c2l;
        case GraphShapeId::path3: return ClassLabel::c2m;
        case GraphShapeId::paw: return ClassLabel::c2n;
        case GraphShapeId::cycle4: return ClassLabel::c2o;
        case GraphShapeId::five_edge: return ClassLabel::c2p;
        default: return ClassLabel::c2q;
    }
}

}  // namespace

ClassReport classify(const PureState& psi, const ClassifyOptions& opts) {
    ReportOptions ropts;
    ropts.purity_eps = opts.purity_eps;
    ClassReport out;
    out.measures = full_report(psi, ropts);
    out.factorization = factorization_structure(psi, opts.purity_eps);
    out.graph = build_graph(out.measures, out.factorization, opts.edge_eps);

    if (psi.n_qubits == 2) {
        const SchmidtPair sp = schmidt2(psi);
        out.label = (2.0 * sp.alpha * sp.beta > opts.edge_eps) ? ClassLabel::ent2 : ClassLabel::sep2;
    } else if (psi.n_qubits == 3) {
        out.label = classify3(out.factorization, out.graph);
    } else {
        out.label = classify4(out.factorization, out.graph);
    }
    return out;
}

}  // namespace entgraph
