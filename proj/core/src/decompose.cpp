#include "psdblock/decompose.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "psdblock/errors.hpp"

namespace psdblock {

namespace {

void require_psd(const PsdBlockMatrix& m, double tol) {
    if (m.psd_certified) return;
    const PositivityVerdict v = positivity(HermitianMatrix(m.assembled()), tol);
    if (!v.is_psd())
        throw NotPsdError("decompose: matrix is not PSD (min eigenvalue " +
                          std::to_string(v.min_eigenvalue) + ")");
}

void require_equal_blocks(const PsdBlockMatrix& m) {
    if (m.n != m.m)
        throw DimensionMismatchError("decompose: corollary needs blocks of the same size");
}

// Unitary carrying A ⊕ 0 (resp. 0 ⊕ B) onto T*T: with T = W Σ Z* we have
// TT* = W Σ² W* and T*T = Z Σ² Z*, so Z W* conjugates TT* onto T*T.
Matrix congruence_unitary(const Matrix& t) {
    Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success)
        throw SvdError("decompose: SVD of square-root factor failed");
    return svd.matrixV() * svd.matrixU().adjoint();
}

// Core of Lemma 1 applied to an assembled PSD matrix with cut at n: returns
// unitaries u, v with full = u (A ⊕ 0) u* + v (0 ⊕ B) v* where A, B are the
// diagonal blocks of full.
void lemma1_unitaries(const Matrix& full, Eigen::Index n, Matrix& u, Matrix& v) {
    const Eigen::Index dim = full.rows();
    const HermitianMatrix root = sqrt_psd(HermitianMatrix(full));
    // root = [[C, Y], [Y*, D]]; T keeps the top n rows, S the bottom rows.
    Matrix t = Matrix::Zero(dim, dim);
    t.topRows(n) = root.mat().topRows(n);
    Matrix s = Matrix::Zero(dim, dim);
    s.bottomRows(dim - n) = root.mat().bottomRows(dim - n);
    // full = root² = T*T + S*S, TT* = A ⊕ 0, SS* = 0 ⊕ B.
    u = congruence_unitary(t);
    v = congruence_unitary(s);
}

Decomposition decompose_via(const Matrix& full, Eigen::Index n, const Matrix& p_block,
                            const Matrix& q_block, const Matrix& pre_unitary) {
    const Eigen::Index dim = full.rows();
    Matrix u, v;
    lemma1_unitaries(full, n, u, v);
    Decomposition d;
    d.U = pre_unitary * u;
    d.V = pre_unitary * v;
    Matrix p = Matrix::Zero(dim, dim);
    p.topLeftCorner(n, n) = p_block;
    Matrix q = Matrix::Zero(dim, dim);
    q.bottomRightCorner(dim - n, dim - n) = q_block;
    d.P = HermitianMatrix(p);
    d.Q = HermitianMatrix(q);
    const Matrix original = pre_unitary * full * pre_unitary.adjoint();
    d.residual = (original - d.U * d.P.mat() * d.U.adjoint() - d.V * d.Q.mat() * d.V.adjoint())
                     .norm() /
                 std::max(1.0, original.norm());
    return d;
}

}  // namespace

Decomposition lemma1_decompose(const PsdBlockMatrix& m, double tol) {
    require_psd(m, tol);
    const Eigen::Index dim = m.n + m.m;
    return decompose_via(m.assembled(), m.n, m.A.mat(), m.B.mat(),
                         Matrix::Identity(dim, dim));
}

Decomposition corollary_R_decompose(const PsdBlockMatrix& m, double tol) {
    require_psd(m, tol);
    require_equal_blocks(m);
    const Eigen::Index n = m.n;
    const Matrix eye = Matrix::Identity(n, n);
    Matrix j(2 * n, 2 * n);
    j.topLeftCorner(n, n) = eye;
    j.topRightCorner(n, n) = -eye;
    j.bottomLeftCorner(n, n) = eye;
    j.bottomRightCorner(n, n) = eye;
    j /= std::sqrt(2.0);
    const Matrix rotated = j * m.assembled() * j.adjoint();
    const Matrix mid = (m.A.mat() + m.B.mat()) / 2.0;
    const Matrix rx = real_part(m.X).mat();
    // rotated has diagonal blocks (A+B)/2 - R(X) and (A+B)/2 + R(X)
    return decompose_via(rotated, n, mid - rx, mid + rx, j.adjoint());
}

Decomposition corollary_I_decompose(const PsdBlockMatrix& m, double tol) {
    require_psd(m, tol);
    require_equal_blocks(m);
    const Eigen::Index n = m.n;
    const Matrix eye = Matrix::Identity(n, n);
    Matrix j(2 * n, 2 * n);
    j.topLeftCorner(n, n) = eye;
    j.topRightCorner(n, n) = -eye;
    j.bottomLeftCorner(n, n) = eye;
    j.bottomRightCorner(n, n) = eye;
    j /= std::sqrt(2.0);
    Matrix j1 = Matrix::Zero(2 * n, 2 * n);
    j1.topLeftCorner(n, n) = eye;
    j1.bottomRightCorner(n, n) = Complex(0.0, -1.0) * eye;
    const Matrix g = j * j1;
    const Matrix rotated = g * m.assembled() * g.adjoint();
    const Matrix mid = (m.A.mat() + m.B.mat()) / 2.0;
    const Matrix ix = imag_part(m.X).mat();
    return decompose_via(rotated, n, mid + ix, mid - ix, g.adjoint());
}

AbsBound corollary_abs_bound(const PsdBlockMatrix& m, double tol) {
    const Decomposition d = corollary_I_decompose(m, tol);
    const Eigen::Index n = m.n;
    const Matrix diff = (m.X - m.X.adjoint()).eval();
    const Matrix abs_diff = matrix_abs(diff).mat();
    const Matrix bound_block = m.A.mat() + m.B.mat() + abs_diff;
    AbsBound bound;
    bound.bound_P = HermitianMatrix(bound_block);
    bound.bound_Q = HermitianMatrix(bound_block);
    bound.U = d.U;
    bound.V = d.V;
    Matrix padded_p = Matrix::Zero(2 * n, 2 * n);
    padded_p.topLeftCorner(n, n) = bound_block;
    Matrix padded_q = Matrix::Zero(2 * n, 2 * n);
    padded_q.bottomRightCorner(n, n) = bound_block;
    const Matrix gap = 0.5 * (d.U * padded_p * d.U.adjoint() + d.V * padded_q * d.V.adjoint()) -
                       m.assembled();
    bound.gap_spectrum = hermitian_eigenvalues(HermitianMatrix(gap));
    return bound;
}

double verify_decomposition(const PsdBlockMatrix& m, const Decomposition& d, double unitary_tol) {
    const Matrix full = m.assembled();
    if (d.U.rows() != full.rows() || d.V.rows() != full.rows() || d.P.dim() != full.rows() ||
        d.Q.dim() != full.rows())
        throw DimensionMismatchError("verify_decomposition: dimension mismatch");
    const Eigen::Index dim = full.rows();
    const Matrix eye = Matrix::Identity(dim, dim);
    const double u_err = (d.U.adjoint() * d.U - eye).norm();
    const double v_err = (d.V.adjoint() * d.V - eye).norm();
    if (u_err > unitary_tol * dim || v_err > unitary_tol * dim)
        throw InvalidArgumentError("verify_decomposition: U or V is not unitary (residues " +
                                   std::to_string(u_err) + ", " + std::to_string(v_err) + ")");
    const Matrix rebuilt =
        d.U * d.P.mat() * d.U.adjoint() + d.V * d.Q.mat() * d.V.adjoint();
    return (full - rebuilt).norm() / std::max(1.0, full.norm());
}

}  // namespace psdblock
