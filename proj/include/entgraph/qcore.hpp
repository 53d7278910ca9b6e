#pragma once

#include <vector>

#include "entgraph/complex_matrix.hpp"

namespace entgraph {

// Default tolerance below which a marginal counts as pure.
inline constexpr double kPurityEps = 1e-9;
// Vectors with norm at or below this are rejected as zero.
inline constexpr double kZeroNorm = 1e-9;

// Normalized pure state of 2, 3 or 4 qubits. Amplitude index i encodes
// the basis ket |q1 q2 ... qn> with qubit 1 as the most significant bit,
// so for n = 4 index 11 = binary 1011 = |1011>.
struct PureState {
    int n_qubits = 0;
    std::vector<cdouble> amplitudes;
};

// Ascending, duplicate-free 1-based qubit labels.
class QubitSet {
  public:
    QubitSet(std::initializer_list<int> qubits);
    explicit QubitSet(std::vector<int> qubits);

    const std::vector<int>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(int q) const noexcept;

  private:
    std::vector<int> members_;
};

// Hermitian, unit-trace, PSD complex matrix of dimension 2^k, k in 1..4.
// Construction validates hermiticity and trace; positivity is checked
// spectrally for dimensions the eigensolver covers (<= 4).
class DensityMatrix {
  public:
    explicit DensityMatrix(CMatrix entries);

    std::size_t dim() const noexcept { return entries_.rows(); }
    int n_qubits() const noexcept;
    const CMatrix& entries() const noexcept { return entries_; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  private:
    CMatrix entries_;
};

// Normalizes a raw amplitude vector of length 4, 8 or 16 into a PureState.
// Throws errc::zero_vector when the norm is <= 1e-9, errc::bad_length for
// any other length, errc::bad_params on non-finite entries.
PureState normalize(const std::vector<cdouble>& raw);

// rho = |psi><psi|
DensityMatrix density_of(const PureState& psi);

// Reduced density matrix over `keep`; surviving qubits preserve their
// relative order (lower label stays more significant).
DensityMatrix partial_trace(const DensityMatrix& rho, int n_qubits, const QubitSet& keep);

// Tr(rho^2)
double purity(const DensityMatrix& rho);

// Eigenvalues of a Hermitian matrix up to 4x4, sorted descending.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

// Principal square root of a Hermitian PSD matrix up to 4x4. Eigenvalues
// in [-1e-8, 0) are clamped to zero; below -1e-8 throws errc::not_psd.
CMatrix hermitian_sqrt(const CMatrix& m);

// Applies one 2x2 unitary per qubit. Throws errc::not_unitary when some
// u fails u^dagger u = I within 1e-10, errc::bad_length on a wrong count.
PureState apply_local_unitaries(const PureState& psi, const std::vector<CMatrix>& us);

// Helpers shared by the measure and taxonomy layers.
int bit_of_qubit(int index, int n_qubits, int qubit);
std::vector<int> complement_of(const QubitSet& keep, int n_qubits);

}  // namespace entgraph
