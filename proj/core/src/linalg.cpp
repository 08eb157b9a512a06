#include "psdblock/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "psdblock/errors.hpp"

namespace psdblock {

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive_definite";
        case Definiteness::positive_semidefinite: return "positive_semidefinite";
        case Definiteness::indefinite: return "indefinite";
        case Definiteness::negative_semidefinite: return "negative_semidefinite";
        case Definiteness::negative_definite: return "negative_definite";
    }
    return "indefinite";
}

HermitianMatrix hermitize(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw NotSquareError("hermitize: matrix is not square");
    const double residue = (m - m.adjoint()).norm();
    const double scale = std::max(1.0, m.norm());
    if (residue > tol * scale)
        throw HermitianResidueError("hermitize: anti-Hermitian residue " +
                                    std::to_string(residue) + " exceeds tolerance");
    return HermitianMatrix(m);
}

HermitianMatrix real_part(const Matrix& x) {
    if (x.rows() != x.cols()) throw NotSquareError("real_part: matrix is not square");
    return HermitianMatrix(x);  // construction symmetrizes to (X + X*)/2
}

HermitianMatrix imag_part(const Matrix& x) {
    if (x.rows() != x.cols()) throw NotSquareError("imag_part: matrix is not square");
    const Complex two_i(0.0, 2.0);
    Matrix im = (x - x.adjoint()) / two_i;
    return HermitianMatrix(im);
}

RealVector hermitian_eigenvalues(const HermitianMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("hermitian_eigenvalues: solver did not converge");
    return solver.eigenvalues();
}

PositivityVerdict positivity(const HermitianMatrix& m, double tol) {
    PositivityVerdict v;
    v.tolerance_used = tol;
    if (m.dim() == 0) {
        v.verdict = Definiteness::positive_semidefinite;
        return v;
    }
    const RealVector eig = hermitian_eigenvalues(m);
    v.min_eigenvalue = eig(0);
    v.max_eigenvalue = eig(eig.size() - 1);
    const double thresh =
        tol * std::max(1.0, std::max(std::abs(v.min_eigenvalue), std::abs(v.max_eigenvalue)));
    if (v.min_eigenvalue > thresh)
        v.verdict = Definiteness::positive_definite;
    else if (v.min_eigenvalue >= -thresh)
        v.verdict = Definiteness::positive_semidefinite;
    else if (v.max_eigenvalue < -thresh)
        v.verdict = Definiteness::negative_definite;
    else if (v.max_eigenvalue <= thresh)
        v.verdict = Definiteness::negative_semidefinite;
    else
        v.verdict = Definiteness::indefinite;
    return v;
}

HermitianMatrix matrix_abs(const Matrix& x) {
    if (x.rows() != x.cols()) throw NotSquareError("matrix_abs: matrix is not square");
    HermitianMatrix gram((x.adjoint() * x).eval());
    return sqrt_psd(gram);
}

HermitianMatrix sqrt_psd(const HermitianMatrix& m, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat());
    if (solver.info() != Eigen::Success)
        throw EigensolverError("sqrt_psd: solver did not converge");
    RealVector eig = solver.eigenvalues();
    const double scale = std::max(1.0, eig.size() ? std::abs(eig(eig.size() - 1)) : 0.0);
    RealVector root(eig.size());
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        if (eig(i) < -tol * scale)
            throw NotPsdError("sqrt_psd: matrix has a negative eigenvalue " +
                              std::to_string(eig(i)));
        root(i) = std::sqrt(std::max(eig(i), 0.0));
    }
    Matrix s = solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
    return HermitianMatrix(s);
}

bool commutes(const Matrix& p, const Matrix& q, double tol) {
    if (p.rows() != p.cols() || q.rows() != q.cols() || p.rows() != q.rows())
        throw DimensionMismatchError("commutes: need square matrices of equal size");
    const double residue = (p * q - q * p).norm();
    return residue <= tol * std::max(1.0, p.norm() * q.norm());
}

bool commutes_with_diagonal(const Matrix& x, const RealVector& a, double tol) {
    if (x.rows() != x.cols() || x.rows() != a.size())
        throw DimensionMismatchError("commutes_with_diagonal: dimension mismatch");
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (std::abs(x(i, j)) * std::abs(a(i) - a(j)) > tol) return false;
    return true;
}

HermitianMatrix random_psd(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    return random_psd(n, rng);
}

HermitianMatrix random_psd(Eigen::Index n, Rng& rng) {
    if (n < 1) throw InvalidArgumentError("random_psd: n must be >= 1");
    const Matrix g = rng.complex_gaussian_matrix(n, n);
    return HermitianMatrix((g.adjoint() * g).eval());
}

Matrix random_unitary(Eigen::Index n, Rng& rng) {
    const Matrix g = rng.complex_gaussian_matrix(n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    // fix the phase convention so the distribution is unitarily invariant
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex rii = r(i, i);
        if (std::abs(rii) > 0.0) q.col(i) *= rii / std::abs(rii);
    }
    return q;
}

PsdBlockMatrix assemble(const HermitianMatrix& a, const Matrix& x, const HermitianMatrix& b,
                        bool certify_psd, double tol) {
    if (x.rows() != a.dim() || x.cols() != b.dim())
        throw DimensionMismatchError("assemble: X must be n x m for A n x n, B m x m");
    PsdBlockMatrix m;
    m.n = a.dim();
    m.m = b.dim();
    m.A = a;
    m.X = x;
    m.B = b;
    if (certify_psd) {
        const PositivityVerdict v = positivity(HermitianMatrix(m.assembled()), tol);
        if (!v.is_psd())
            throw NotPsdError("assemble: matrix is not PSD (min eigenvalue " +
                              std::to_string(v.min_eigenvalue) + ")");
        m.psd_certified = true;
    }
    return m;
}

PsdBlockMatrix split(const HermitianMatrix& m, Eigen::Index n, bool certify_psd, double tol) {
    const Eigen::Index dim = m.dim();
    if (n < 1 || n >= dim) throw DimensionMismatchError("split: need 1 <= n < dim");
    const Matrix& full = m.mat();
    HermitianMatrix a(full.topLeftCorner(n, n).eval());
    HermitianMatrix b(full.bottomRightCorner(dim - n, dim - n).eval());
    Matrix x = full.topRightCorner(n, dim - n);
    return assemble(a, x, b, certify_psd, tol);
}

}  // namespace psdblock
