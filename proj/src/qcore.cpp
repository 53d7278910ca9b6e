#include "entgraph/qcore.hpp"

#include <algorithm>
#include <cmath>

#include "entgraph/errors.hpp"

namespace entgraph {

namespace {

bool is_power_of_two_dim(std::size_t d) { return d == 2 || d == 4 || d == 8 || d == 16; }

int qubits_for_dim(std::size_t d) {
    int n = 0;
    while ((std::size_t(1) << n) < d) ++n;
    return n;
}

void check_finite(const std::vector<cdouble>& v) {
    for (const auto& a : v) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            raise(errc::bad_params, "non-finite amplitude");
    }
}

}  // namespace

QubitSet::QubitSet(std::initializer_list<int> qubits) : QubitSet(std::vector<int>(qubits)) {}

QubitSet::QubitSet(std::vector<int> qubits) : members_(std::move(qubits)) {
    if (members_.empty()) raise(errc::bad_subset, "empty qubit set");
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i + 1 < members_.size(); ++i) {
        if (members_[i] == members_[i + 1]) raise(errc::bad_subset, "duplicate qubit label");
    }
    if (members_.front() < 1) raise(errc::bad_subset, "qubit labels are 1-based");
}

bool QubitSet::contains(int q) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), q);
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
    const std::size_t d = entries_.rows();
    if (entries_.cols() != d || !is_power_of_two_dim(d))
        raise(errc::bad_dimension, "density matrix must be square with dimension 2, 4, 8 or 16");
    if (!entries_.is_hermitian(1e-12)) raise(errc::not_hermitian, "density matrix not Hermitian within 1e-12");
    if (std::abs(entries_.trace() - cdouble(1.0, 0.0)) > 1e-12)
        raise(errc::bad_params, "density matrix trace differs from 1 beyond 1e-12");
    if (d <= 4) {
        // Positivity is verified spectrally where the solver applies; larger
        // matrices only arise from construction paths that preserve it.
        for (const double ev : hermitian_eigenvalues(entries_)) {
            if (ev < -1e-10) raise(errc::not_psd, "density matrix has eigenvalue below -1e-10");
        }
    }
}

int DensityMatrix::n_qubits() const noexcept { return qubits_for_dim(entries_.rows()); }

PureState normalize(const std::vector<cdouble>& raw) {
    if (raw.size() != 4 && raw.size() != 8 && raw.size() != 16)
        raise(errc::bad_length, "amplitude vector must have length 4, 8 or 16");
    check_finite(raw);
    double norm_sq = 0.0;
    for (const auto& a : raw) norm_sq += std::norm(a);
    const double norm = std::sqrt(norm_sq);
    if (norm <= kZeroNorm) raise(errc::zero_vector, "amplitude vector has (near-)zero norm");

    PureState psi;
    psi.n_qubits = qubits_for_dim(raw.size());
    psi.amplitudes.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) psi.amplitudes[i] = raw[i] / norm;
    return psi;
}

DensityMatrix density_of(const PureState& psi) {
    const std::size_t d = psi.amplitudes.size();
    CMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    return DensityMatrix(std::move(rho));
}

int bit_of_qubit(int index, int n_qubits, int qubit) {
    return (index >> (n_qubits - qubit)) & 1;
}

std::vector<int> complement_of(const QubitSet& keep, int n_qubits) {
    std::vector<int> rest;
    for (int q = 1; q <= n_qubits; ++q)
        if (!keep.contains(q)) rest.push_back(q);
    return rest;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int n_qubits, const QubitSet& keep) {
    if (n_qubits < 2 || n_qubits > 4 || rho.dim() != (std::size_t(1) << n_qubits))
        raise(errc::bad_dimension, "density matrix dimension does not match qubit count");
    if (keep.members().back() > n_qubits) raise(errc::bad_subset, "kept qubit label out of range");
    if (keep.size() >= static_cast<std::size_t>(n_qubits))
        raise(errc::bad_subset, "kept subset must be proper");

    const std::vector<int>& kept = keep.members();
    const std::vector<int> traced = complement_of(keep, n_qubits);
    const int k = static_cast<int>(kept.size());
    const int t = static_cast<int>(traced.size());
    const std::size_t dim_out = std::size_t(1) << k;

    CMatrix out(dim_out, dim_out);
    for (std::size_t r = 0; r < dim_out; ++r) {
        for (std::size_t c = 0; c < dim_out; ++c) {
            int base_i = 0;
            int base_j = 0;
            for (int b = 0; b < k; ++b) {
                const int shift = n_qubits - kept[b];
                base_i |= ((r >> (k - 1 - b)) & 1) << shift;
                base_j |= ((c >> (k - 1 - b)) & 1) << shift;
            }
            cdouble sum = 0.0;
            for (int env = 0; env < (1 << t); ++env) {
                int i = base_i;
                int j = base_j;
                for (int b = 0; b < t; ++b) {
                    const int bit = (env >> (t - 1 - b)) & 1;
                    const int shift = n_qubits - traced[b];
                    i |= bit << shift;
                    j |= bit << shift;
                }
                sum += rho(i, j);
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix(std::move(out));
}

double purity(const DensityMatrix& rho) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double p = 0.0;
    const std::size_t d = rho.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p += std::norm(rho(i, j));
    return p;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
    return hermitian_eigensystem(m).values;
}

CMatrix hermitian_sqrt(const CMatrix& m) {
    EigenSystem es = hermitian_eigensystem(m);
    const std::size_t n = m.rows();
    for (double& ev : es.values) {
        if (ev < -1e-8) raise(errc::not_psd, "matrix has eigenvalue below -1e-8");
        if (ev < 0.0) ev = 0.0;
    }
    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cdouble s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += es.vectors(i, k) * std::sqrt(es.values[k]) * std::conj(es.vectors(j, k));
            out(i, j) = s;
        }
    }
    return out;
}

PureState apply_local_unitaries(const PureState& psi, const std::vector<CMatrix>& us) {
    if (us.size() != static_cast<std::size_t>(psi.n_qubits))
        raise(errc::bad_length, "need exactly one unitary per qubit");
    for (const CMatrix& u : us) {
        if (u.rows() != 2 || u.cols() != 2) raise(errc::not_unitary, "local unitary must be 2x2");
        if ((u.adjoint() * u).max_abs_diff(CMatrix::identity(2)) > 1e-10)
            raise(errc::not_unitary, "u^dagger u differs from identity beyond 1e-10");
    }

    PureState out = psi;
    for (int q = 1; q <= psi.n_qubits; ++q) {
        const CMatrix& u = us[q - 1];
        const int stride = 1 << (psi.n_qubits - q);
        std::vector<cdouble> next(out.amplitudes.size());
        for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
            if ((i / stride) % 2 != 0) continue;
            const cdouble a0 = out.amplitudes[i];
            const cdouble a1 = out.amplitudes[i + stride];
            next[i] = u(0, 0) * a0 + u(0, 1) * a1;
            next[i + stride] = u(1, 0) * a0 + u(1, 1) * a1;
        }
        out.amplitudes = std::move(next);
    }
    return out;
}

}  // namespace entgraph
