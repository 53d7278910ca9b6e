#pragma once

#include <map>
#include <utility>
#include <vector>

#include "entgraph/qcore.hpp"

namespace entgraph {

// Measures at or below this are snapped to exactly zero in reports.
inline constexpr double kMeasureZero = 1e-10;

// Schmidt coefficients of a two-qubit pure state, alpha >= beta >= 0,
// alpha^2 + beta^2 = 1.
struct SchmidtPair {
    double alpha = 0.0;
    double beta = 0.0;
};

struct ReportOptions {
    double purity_eps = kPurityEps;
    bool raw = false;  // keep sub-threshold values instead of snapping to 0
};

// Every measure of one state: pairwise concurrences, bipartition split
// concurrences, the global tri-/four-partite concurrence, and the
// tripartite value of each three-qubit subset whose marginal is pure.
struct ConcurrenceReport {
    int n_qubits = 0;
    std::map<std::pair<int, int>, double> pairwise;      // (i, j) with i < j
    std::map<std::vector<int>, double> splits;           // key: one block of the bipartition
    double global = 0.0;
    std::map<std::vector<int>, double> triples;          // only pure triple marginals

    // Symmetric pairwise lookup.
    double pair_value(int i, int j) const {
        if (i > j) std::swap(i, j);
        return pairwise.at({i, j});
    }
};

// rho_tilde = (sigma_y x sigma_y) rho^* (sigma_y x sigma_y)
CMatrix spin_flip(const DensityMatrix& rho);

// Wootters concurrence C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}
// with l_i the descending eigenvalues of rho*rho_tilde, obtained from the
// Hermitian similarity sqrt(rho) * rho_tilde * sqrt(rho).
double wootters_concurrence(const DensityMatrix& rho);

// Non-Hermitian spectrum of rho*rho_tilde via the Hermitian route, clamped
// nonnegative and sorted descending. Exposed for the cross-route checks.
std::vector<double> wootters_lambdas(const DensityMatrix& rho);

// Entanglement of formation from a concurrence value.
double eof(double c);

SchmidtPair schmidt2(const PureState& psi);

// sqrt(2 (1 - Tr rho_a^2)); exactly 0 when the marginal is pure within
// purity_eps. Valid for 3- and 4-qubit states.
double split_concurrence_1v3(const PureState& psi, int qubit, double purity_eps = kPurityEps);

// sqrt(4/3 (1 - Tr rho_pair^2)) for a 4-qubit state.
double split_concurrence_2v2(const PureState& psi, const QubitSet& pair,
                             double purity_eps = kPurityEps);

// Geometric mean of the three 1-vs-2 split concurrences; 0 if any factor is 0.
double tri_concurrence(const PureState& psi, double purity_eps = kPurityEps);

// Geometric mean of the four 1-vs-3 and three 2-vs-2 split concurrences;
// 0 if any factor is 0.
double four_concurrence(const PureState& psi, double purity_eps = kPurityEps);

ConcurrenceReport full_report(const PureState& psi, const ReportOptions& opts = {});

}  // namespace entgraph
