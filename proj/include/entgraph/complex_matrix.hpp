#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace entgraph {

using cdouble = std::complex<double>;

// Dense complex matrix sized for this library's needs (2x2 up to 16x16).
// Row-major storage, value semantics.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cdouble(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n);
    // Builds from nested initializer lists; all rows must have equal length.
    static CMatrix from_rows(std::initializer_list<std::initializer_list<cdouble>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix scaled(cdouble factor) const;

    CMatrix adjoint() const;
    CMatrix conjugate() const;
    CMatrix transpose() const;

    cdouble trace() const;
    double frobenius_norm() const;
    // Frobenius norm of the strictly off-diagonal part.
    double off_diagonal_norm() const;
    double max_abs_diff(const CMatrix& other) const;
    bool is_hermitian(double tol) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

struct EigenSystem {
    std::vector<double> values;  // descending
    CMatrix vectors;             // column k pairs with values[k]
};

// Eigendecomposition of a Hermitian matrix up to 4x4 by cyclic complex
// Jacobi rotations. Sweeps until the off-diagonal Frobenius norm drops
// below 1e-14, capped at 50 sweeps. Throws errc::not_hermitian when the
// input is not Hermitian within 1e-10, errc::bad_dimension above 4x4.
EigenSystem hermitian_eigensystem(const CMatrix& m);

}  // namespace entgraph
