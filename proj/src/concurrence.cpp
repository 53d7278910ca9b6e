#include "entgraph/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include "entgraph/errors.hpp"

namespace entgraph {

namespace {

// Eigenvalues of sqrt(rho)*rho_tilde*sqrt(rho) below this are treated as
// exact zeros: they sit at the product round-off floor, and taking their
// square root would otherwise inject sqrt(eps)-sized noise into the
// concurrence subtraction.
constexpr double kSpectrumFloor = 1e-13;

CMatrix sigma_y_pair() {
    return CMatrix::from_rows({{0.0, 0.0, 0.0, -1.0},
                               {0.0, 0.0, 1.0, 0.0},
                               {0.0, 1.0, 0.0, 0.0},
                               {-1.0, 0.0, 0.0, 0.0}});
}

double snap(double value) { return value <= kMeasureZero ? 0.0 : value; }

double clamp01(double value) { return std::min(std::max(value, 0.0), 1.0); }

double split_kernel(const DensityMatrix& marginal, double scale, double purity_eps) {
    const double p = purity(marginal);
    if (p >= 1.0 - purity_eps) return 0.0;
    return std::sqrt(std::max(0.0, scale * (1.0 - p)));
}

double geometric_mean(const std::vector<double>& factors) {
    double product = 1.0;
    for (const double f : factors) {
        if (f <= 0.0) return 0.0;
        product *= f;
    }
    return std::pow(product, 1.0 / static_cast<double>(factors.size()));
}

}  // namespace

CMatrix spin_flip(const DensityMatrix& rho) {
    if (rho.dim() != 4) raise(errc::bad_dimension, "spin flip needs a two-qubit density matrix");
    const CMatrix yy = sigma_y_pair();
    return yy * rho.entries().conjugate() * yy;
}

std::vector<double> wootters_lambdas(const DensityMatrix& rho) {
    if (rho.dim() != 4) raise(errc::bad_dimension, "concurrence needs a two-qubit density matrix");
    const CMatrix root = hermitian_sqrt(rho.entries());
    CMatrix m = root * spin_flip(rho) * root;
    // Round-off leaves an O(1e-16) anti-Hermitian residue; fold it away.
    m = (m + m.adjoint()).scaled(0.5);
    std::vector<double> lambdas = hermitian_eigenvalues(m);
    for (double& l : lambdas) l = (l < kSpectrumFloor) ? 0.0 : l;
    return lambdas;
}

double wootters_concurrence(const DensityMatrix& rho) {
    const std::vector<double> lambdas = wootters_lambdas(rho);
    double c = std::sqrt(lambdas[0]);
    for (std::size_t i = 1; i < lambdas.size(); ++i) c -= std::sqrt(lambdas[i]);
    return snap(clamp01(c));
}

double eof(double c) {
    if (c < -1e-12 || c > 1.0 + 1e-12) raise(errc::out_of_range, "concurrence must lie in [0, 1]");
    c = clamp01(c);
    const double x = 0.5 + 0.5 * std::sqrt(1.0 - c * c);
    auto plog2p = [](double p) { return p <= 0.0 ? 0.0 : p * std::log2(p); };
    return clamp01(-plog2p(x) - plog2p(1.0 - x));
}

SchmidtPair schmidt2(const PureState& psi) {
    if (psi.n_qubits != 2) raise(errc::bad_dimension, "Schmidt pair is defined for two qubits");
    // Singular values of the 2x2 amplitude matrix M[q1][q2].
    CMatrix m(2, 2);
    m(0, 0) = psi.amplitudes[0];
    m(0, 1) = psi.amplitudes[1];
    m(1, 0) = psi.amplitudes[2];
    m(1, 1) = psi.amplitudes[3];
    const std::vector<double> ev = hermitian_eigenvalues(m.adjoint() * m);
    SchmidtPair out;
    out.alpha = std::sqrt(std::max(0.0, ev[0]));
    out.beta = std::sqrt(std::max(0.0, ev[1]));
    return out;
}

double split_concurrence_1v3(const PureState& psi, int qubit, double purity_eps) {
    if (psi.n_qubits != 3 && psi.n_qubits != 4)
        raise(errc::bad_dimension, "single-qubit split needs 3 or 4 qubits");
    if (qubit < 1 || qubit > psi.n_qubits) raise(errc::bad_qubit, "qubit label out of range");
    const DensityMatrix marginal = partial_trace(density_of(psi), psi.n_qubits, QubitSet{qubit});
    return clamp01(split_kernel(marginal, 2.0, purity_eps));
}

double split_concurrence_2v2(const PureState& psi, const QubitSet& pair, double purity_eps) {
    if (psi.n_qubits != 4) raise(errc::bad_dimension, "pair split needs 4 qubits");
    if (pair.size() != 2) raise(errc::bad_subset, "pair split needs exactly two qubits");
    if (pair.members().back() > 4) raise(errc::bad_subset, "qubit label out of range");
    const DensityMatrix marginal = partial_trace(density_of(psi), 4, pair);
    return clamp01(split_kernel(marginal, 4.0 / 3.0, purity_eps));
}

double tri_concurrence(const PureState& psi, double purity_eps) {
    if (psi.n_qubits != 3) raise(errc::bad_dimension, "tripartite concurrence needs 3 qubits");
    std::vector<double> factors;
    for (int q = 1; q <= 3; ++q) factors.push_back(split_concurrence_1v3(psi, q, purity_eps));
    return geometric_mean(factors);
}

double four_concurrence(const PureState& psi, double purity_eps) {
    if (psi.n_qubits != 4) raise(errc::bad_dimension, "fourpartite concurrence needs 4 qubits");
    std::vector<double> factors;
    for (int q = 1; q <= 4; ++q) factors.push_back(split_concurrence_1v3(psi, q, purity_eps));
    for (int partner = 2; partner <= 4; ++partner)
        factors.push_back(split_concurrence_2v2(psi, QubitSet{1, partner}, purity_eps));
    return geometric_mean(factors);
}

namespace {

// Tripartite kernel applied to an (assumed pure) three-qubit marginal.
double triple_kernel(const DensityMatrix& rho3, double purity_eps) {
    std::vector<double> factors;
    for (int q = 1; q <= 3; ++q) {
        const DensityMatrix one = partial_trace(rho3, 3, QubitSet{q});
        factors.push_back(split_kernel(one, 2.0, purity_eps));
    }
    return geometric_mean(factors);
}

}  // namespace

ConcurrenceReport full_report(const PureState& psi, const ReportOptions& opts) {
    if (psi.n_qubits < 2 || psi.n_qubits > 4)
        raise(errc::bad_dimension, "report covers 2, 3 or 4 qubits");

    const int n = psi.n_qubits;
    const DensityMatrix rho = density_of(psi);
    auto maybe_snap = [&](double v) { return opts.raw ? v : snap(v); };

    ConcurrenceReport report;
    report.n_qubits = n;

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const DensityMatrix pair_rho =
                (n == 2) ? rho : partial_trace(rho, n, QubitSet{i, j});
            double c = wootters_concurrence(pair_rho);
            report.pairwise[{i, j}] = maybe_snap(c);
        }
    }

    for (int q = 1; q <= n; ++q) {
        const DensityMatrix one = partial_trace(rho, n, QubitSet{q});
        report.splits[{q}] = maybe_snap(clamp01(split_kernel(one, 2.0, opts.purity_eps)));
    }
    if (n == 4) {
        for (int partner = 2; partner <= 4; ++partner) {
            const QubitSet pair{1, partner};
            report.splits[pair.members()] =
                maybe_snap(split_concurrence_2v2(psi, pair, opts.purity_eps));
        }
    }

    if (n == 2) {
        report.global = report.pairwise[{1, 2}];
    } else if (n == 3) {
        report.global = maybe_snap(tri_concurrence(psi, opts.purity_eps));
    } else {
        report.global = maybe_snap(four_concurrence(psi, opts.purity_eps));
    }

    if (n == 4) {
        for (int skip = 1; skip <= 4; ++skip) {
            std::vector<int> triple;
            for (int q = 1; q <= 4; ++q)
                if (q != skip) triple.push_back(q);
            const DensityMatrix rho3 = partial_trace(rho, 4, QubitSet(triple));
            if (purity(rho3) < 1.0 - opts.purity_eps) continue;
            report.triples[triple] = maybe_snap(triple_kernel(rho3, opts.purity_eps));
        }
    }
    return report;
}

}  // namespace entgraph
