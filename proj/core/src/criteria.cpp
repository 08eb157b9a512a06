#include "psdblock/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "psdblock/errors.hpp"
#include "psdblock/linalg.hpp"

namespace psdblock {

namespace {

bool is_diagonal(const Matrix& m, double tol) {
    const double scale = std::max(1.0, m.norm());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j && std::abs(m(i, j)) > tol * scale) return false;
    return true;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

bool is_normal(const Matrix& m, double tol) {
    return (m.adjoint() * m - m * m.adjoint()).norm() <=
           tol * std::max(1.0, m.norm() * m.norm());
}

}  // namespace

bool schur_pd_test(const HermitianMatrix& a, const Matrix& x, const HermitianMatrix& b,
                   bool strict, double tol) {
    if (x.rows() != a.dim() || x.cols() != b.dim())
        throw DimensionMismatchError("schur_pd_test: X must be n x m");
    const PositivityVerdict bv = positivity(b, tol);
    if (!bv.is_pd())
        throw SingularBlockError("schur_pd_test: B must be positive definite");
    const Matrix b_inv = b.mat().inverse();
    const HermitianMatrix complement((a.mat() - x * b_inv * x.adjoint()).eval());
    const PositivityVerdict cv = positivity(complement, tol);
    return strict ? cv.is_pd() : cv.is_psd();
}

Complex block_det(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                  double tol) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n || c.cols() != n ||
        d.rows() != n || d.cols() != n)
        throw DimensionMismatchError("block_det: need four square blocks of equal size");
    if (!commutes(a, c, tol))
        throw CommutationError("block_det: A and C do not commute");
    return (a * d - c * b).determinant();
}

std::vector<QuadraticPair> pww_eigenvalues(const RealVector& lambda, const RealVector& nu,
                                           const RealVector& d) {
    if (lambda.size() != nu.size() || lambda.size() != d.size())
        throw DimensionMismatchError("pww_eigenvalues: vectors must have equal length");
    std::vector<QuadraticPair> pairs;
    pairs.reserve(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (d(i) < 0.0)
            throw InvalidArgumentError("pww_eigenvalues: d must be nonnegative");
        QuadraticPair p;
        p.lambda_i = lambda(i);
        p.nu_i = nu(i);
        p.d_i = d(i);
        // mu^2 - (lambda + nu) mu + (lambda nu - d) = 0; the discriminant
        // (lambda - nu)^2 + 4d is nonnegative, so both roots are real.
        const double sum = lambda(i) + nu(i);
        const double disc = (lambda(i) - nu(i)) * (lambda(i) - nu(i)) + 4.0 * d(i);
        const double sq = std::sqrt(disc);
        p.root_a = (sum + sq) / 2.0;
        // stable second root through the product when the sum cancels
        const double prod = lambda(i) * nu(i) - d(i);
        p.root_b = (std::abs(p.root_a) > 0.0 && sq > 0.0 && std::abs(prod) > 0.0)
                       ? prod / p.root_a
                       : (sum - sq) / 2.0;
        pairs.push_back(p);
    }
    return pairs;
}

InequalityReport check_main_inequality(const PsdBlockMatrix& m, double tol) {
    if (m.n != m.m)
        throw DimensionMismatchError("check_main_inequality: blocks must have the same size");
    const PositivityVerdict v = positivity(HermitianMatrix(m.assembled()));
    if (!m.psd_certified && !v.is_psd())
        throw NotPsdError("check_main_inequality: matrix is not PSD");

    const Matrix& a = m.A.mat();
    const Matrix& b = m.B.mat();
    const Matrix& x = m.X;
    const double struct_tol = 1e-9;

    InequalityReport rep;
    const bool x_herm = is_hermitian(x, struct_tol);
    const bool a_diag = is_diagonal(a, struct_tol);
    const bool b_diag = is_diagonal(b, struct_tol);
    const bool xsx_diag = is_diagonal((x.adjoint() * x).eval(), struct_tol);
    const bool xs_comm_a = commutes(x.adjoint(), a, struct_tol);
    const bool x_comm_b = commutes(x, b, struct_tol);
    const bool x_normal = is_normal(x, struct_tol);
    rep.hypothesis_checks = {
        {"x_hermitian", x_herm},       {"a_diagonal", a_diag},
        {"b_diagonal", b_diag},        {"xstarx_diagonal", xsx_diag},
        {"xstar_commutes_a", xs_comm_a}, {"x_commutes_b", x_comm_b},
        {"x_normal", x_normal},
    };

    rep.dominance = dominance(m.assembled(), (a + b).eval(), tol);
    // matching order: Hermitian X, then pww, then grouping, then normal X
    rep.theorem_applies = x_herm || (a_diag && b_diag && xs_comm_a && xsx_diag) ||
                          (a_diag && b_diag && xs_comm_a) ||
                          (x_normal && xs_comm_a && x_comm_b);
    rep.conclusion_holds = rep.dominance.lhs_dominated();
    return rep;
}

InequalityReport check_structured_inequality(const RealVector& a_diag, const RealVector& nu,
                                             const Matrix& x, double tol) {
    const Eigen::Index n = a_diag.size();
    if (nu.size() != n || x.rows() != n || x.cols() != n)
        throw DimensionMismatchError("check_structured_inequality: dimension mismatch");
    if (!commutes_with_diagonal(x.adjoint(), a_diag, 1e-9))
        throw CommutationError("check_structured_inequality: X* does not commute with diag(a)");

    const PsdBlockMatrix m =
        assemble(HermitianMatrix::diagonal(a_diag), x, HermitianMatrix::diagonal(nu));
    const PositivityVerdict v = positivity(HermitianMatrix(m.assembled()));
    if (!v.is_psd())
        throw NotPsdError("check_structured_inequality: assembled matrix is not PSD");

    // grouping permutation: stable sort of A's diagonal, ties by index
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a_diag(i) < a_diag(j); });
    Matrix perm = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) perm(k, order[k]) = 1.0;

    // conjugate by P ⊕ P; the X block becomes block diagonal along the groups
    const Matrix pa = perm * HermitianMatrix::diagonal(a_diag).mat() * perm.transpose();
    const Matrix px = perm * x * perm.transpose();
    const Matrix pb = perm * HermitianMatrix::diagonal(nu).mat() * perm.transpose();

    InequalityReport rep = check_main_inequality(m, tol);
    // verify each grouped sub-block matrix is PSD on its own
    const double group_tol = 1e-9;
    Eigen::Index start = 0;
    bool groups_psd = true;
    while (start < n) {
        Eigen::Index stop = start + 1;
        while (stop < n && std::abs(pa(stop, stop) - pa(start, start)) <=
                               group_tol * std::max(1.0, std::abs(pa(start, start))))
            ++stop;
        const Eigen::Index g = stop - start;
        Matrix sub(2 * g, 2 * g);
        sub.topLeftCorner(g, g) = pa.block(start, start, g, g);
        sub.topRightCorner(g, g) = px.block(start, start, g, g);
        sub.bottomLeftCorner(g, g) = px.block(start, start, g, g).adjoint();
        sub.bottomRightCorner(g, g) = pb.block(start, start, g, g);
        if (!positivity(HermitianMatrix(sub)).is_psd()) groups_psd = false;
        start = stop;
    }
    rep.hypothesis_checks.emplace_back("grouped_blocks_psd", groups_psd);
    rep.theorem_applies = rep.theorem_applies && groups_psd;
    return rep;
}

OrderedDiagonalization ordered_diagonalization(const HermitianMatrix& a, const HermitianMatrix& b,
                                               double tol) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("ordered_diagonalization: sizes differ");
    if (!positivity(a, tol).is_psd() || !positivity(b, tol).is_psd())
        throw NotPsdError("ordered_diagonalization: A and B must be PSD");
    const auto solve = [](const HermitianMatrix& h) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(h.mat());
        if (solver.info() != Eigen::Success)
            throw EigensolverError("ordered_diagonalization: solver failed");
        return solver;
    };
    const auto sa = solve(a);
    const auto sb = solve(b);
    const Eigen::Index n = a.dim();
    OrderedDiagonalization od;
    od.D_o.resize(n);
    od.G_o.resize(n);
    Matrix qa(n, n), qb(n, n);
    // Eigen returns ascending order; reverse to descending
    for (Eigen::Index i = 0; i < n; ++i) {
        od.D_o(i) = sa.eigenvalues()(n - 1 - i);
        od.G_o(i) = sb.eigenvalues()(n - 1 - i);
        qa.col(i) = sa.eigenvectors().col(n - 1 - i);
        qb.col(i) = sb.eigenvectors().col(n - 1 - i);
    }
    od.U = qa.adjoint();  // U A U* = diag(D_o)
    od.V = qb.adjoint();
    return od;
}

InequalityReport verify_commuting_normal_case(const PsdBlockMatrix& m, double tol) {
    InequalityReport rep = check_main_inequality(m, tol);
    rep.theorem_applies = rep.hypothesis("x_normal") && rep.hypothesis("xstar_commutes_a") &&
                          rep.hypothesis("x_commutes_b");
    return rep;
}

ZeroBlockVerdict zero_block_verdict(const HermitianMatrix& a, const Matrix& x, double tol) {
    if (x.rows() != a.dim() || x.cols() != a.dim())
        throw DimensionMismatchError("zero_block_verdict: X must match A");
    if (!positivity(a, tol).is_psd())
        throw NotPsdError("zero_block_verdict: A must be PSD");
    const Eigen::Index n = a.dim();
    const PsdBlockMatrix m = assemble(a, x, HermitianMatrix::zero(n));
    ZeroBlockVerdict z;
    z.is_psd = positivity(HermitianMatrix(m.assembled()), tol).is_psd();
    z.offdiag_norm = x.norm();
    const PositivityVerdict re = positivity(real_part(x), tol);
    const PositivityVerdict im = positivity(imag_part(x), tol);
    z.re_positive_definite = re.is_pd();
    z.re_negative_definite = re.verdict == Definiteness::negative_definite;
    z.im_positive_definite = im.is_pd();
    z.im_negative_definite = im.verdict == Definiteness::negative_definite;
    return z;
}

}  // namespace psdblock
