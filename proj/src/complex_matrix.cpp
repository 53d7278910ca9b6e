#include "entgraph/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entgraph/errors.hpp"

namespace entgraph {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cdouble>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    CMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) raise(errc::bad_dimension, "ragged initializer rows");
        std::size_t j = 0;
        for (cdouble v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols_ != rhs.rows_) raise(errc::bad_dimension, "matrix product shape mismatch");
    CMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cdouble aik = (*this)(i, k);
            if (aik == cdouble(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) raise(errc::bad_dimension, "matrix sum shape mismatch");
    CMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) raise(errc::bad_dimension, "matrix difference shape mismatch");
    CMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

CMatrix CMatrix::scaled(cdouble factor) const {
    CMatrix out = *this;
    for (auto& v : out.data_) v *= factor;
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::conjugate() const {
    CMatrix out = *this;
    for (auto& v : out.data_) v = std::conj(v);
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

cdouble CMatrix::trace() const {
    cdouble t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::off_diagonal_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j) s += std::norm((*this)(i, j));
    return std::sqrt(s);
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) raise(errc::bad_dimension, "shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        }
    }
    return true;
}

namespace {

// One complex Jacobi rotation zeroing a(p,q). The 2x2 Hermitian block
// [a b; conj(b) d] is first phase-rotated to a real symmetric block,
// then annihilated with the classic tangent formula (smaller root).
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const cdouble apq = a(p, q);
    const double h = std::abs(apq);
    if (h == 0.0) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const cdouble phase = apq / h;  // e^{i theta}

    const double tau = (app - aqq) / (2.0 * h);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // G = diag(1, conj(phase)) * [[c, -s], [s, c]] on coordinates (p, q)
    const cdouble gpp = c;
    const cdouble gpq = -s;
    const cdouble gqp = s * std::conj(phase);
    const cdouble gqq = c * std::conj(phase);

    const std::size_t n = a.rows();
    // a <- G^dagger a G, applied as column then row updates
    for (std::size_t i = 0; i < n; ++i) {
        const cdouble aip = a(i, p);
        const cdouble aiq = a(i, q);
        a(i, p) = aip * gpp + aiq * gqp;
        a(i, q) = aip * gpq + aiq * gqq;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const cdouble apj = a(p, j);
        const cdouble aqj = a(q, j);
        a(p, j) = std::conj(gpp) * apj + std::conj(gqp) * aqj;
        a(q, j) = std::conj(gpq) * apj + std::conj(gqq) * aqj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const cdouble vip = v(i, p);
        const cdouble viq = v(i, q);
        v(i, p) = vip * gpp + viq * gqp;
        v(i, q) = vip * gpq + viq * gqq;
    }
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::bad_dimension, "eigensystem of non-square matrix");
    if (m.rows() == 0 || m.rows() > 4) raise(errc::bad_dimension, "eigensolver handles 1x1 up to 4x4");
    if (!m.is_hermitian(1e-10)) raise(errc::not_hermitian, "matrix is not Hermitian within 1e-10");

    const std::size_t n = m.rows();
    CMatrix a = m;
    // Symmetrize away sub-tolerance asymmetry so the iteration sees an
    // exactly Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cdouble(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cdouble avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(n);

    constexpr int kMaxSweeps = 50;
    constexpr double kOffTol = 1e-14;
    for (int sweep = 0; sweep < kMaxSweeps && a.off_diagonal_norm() >= kOffTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace entgraph
