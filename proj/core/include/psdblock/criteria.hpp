#pragma once

#include <string>
#include <utility>
#include <vector>

#include "psdblock/norms.hpp"
#include "psdblock/types.hpp"

namespace psdblock {

/// Which structural hypotheses a block matrix satisfies, the Ky Fan
/// comparison of M against A + B, and whether one of the sufficient
/// conditions for ||M|| <= ||A+B|| matched.
struct InequalityReport {
    std::vector<std::pair<std::string, bool>> hypothesis_checks;
    DominanceReport dominance;
    bool theorem_applies = false;
    bool conclusion_holds = false;

    bool hypothesis(const std::string& name) const {
        for (const auto& [k, v] : hypothesis_checks)
            if (k == name) return v;
        return false;
    }
};

/// One quadratic mu^2 - (lambda+nu) mu + (lambda*nu - d) and its two real
/// roots; the pooled roots over all indices are the eigenvalues of the
/// structured block matrix.
struct QuadraticPair {
    double lambda_i = 0.0;
    double nu_i = 0.0;
    double d_i = 0.0;
    double root_a = 0.0;  // larger root
    double root_b = 0.0;
};

/// Schur complement positivity test. strict: A - X B^{-1} X* and B both PD
/// iff the assembled matrix is PD. Non-strict: A - X B^{-1} X* PSD iff the
/// assembled matrix is PSD (B must still be PD for the complement to exist).
bool schur_pd_test(const HermitianMatrix& a, const Matrix& x, const HermitianMatrix& b,
                   bool strict = true, double tol = kPsdTol);

/// det(AD - CB) for commuting A, C; equals the determinant of
/// [[A, B], [C, D]].
Complex block_det(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                  double tol = 1e-8);

/// Roots of the per-index quadratics (lambda_i - mu)(nu_i - mu) - d_i = 0.
std::vector<QuadraticPair> pww_eigenvalues(const RealVector& lambda, const RealVector& nu,
                                           const RealVector& d);

/// Check ||M|| <= ||A+B|| via Ky Fan dominance and record which sufficient
/// hypothesis set (Hermitian X / diagonal+commuting / grouping / normal
/// commuting) applies.
InequalityReport check_main_inequality(const PsdBlockMatrix& m, double tol = kNormTol);

/// The grouping path: A = diag(a_diag) with possibly repeated entries,
/// B = diag(nu), X* commuting with A. Permutes equal diagonal entries of A
/// into contiguous groups, verifies each extracted sub-block matrix is PSD
/// and that the pooled Ky Fan comparison is dominated.
InequalityReport check_structured_inequality(const RealVector& a_diag, const RealVector& nu,
                                             const Matrix& x, double tol = kNormTol);

/// Unitaries U, V with U A U* and V B V* diagonal and both descending, so
/// that every Ky Fan norm of the sum is additive.
struct OrderedDiagonalization {
    Matrix U;
    Matrix V;
    RealVector D_o;  // descending eigenvalues of A
    RealVector G_o;  // descending eigenvalues of B
};

OrderedDiagonalization ordered_diagonalization(const HermitianMatrix& a, const HermitianMatrix& b,
                                               double tol = kPsdTol);

/// The normal-X path: X normal, X* commuting with A, X commuting with B.
InequalityReport verify_commuting_normal_case(const PsdBlockMatrix& m, double tol = kNormTol);

/// [[A, X], [X*, 0]] can only be PSD when X = 0; the definiteness of R(X)
/// and I(X) each independently rule it out.
struct ZeroBlockVerdict {
    bool is_psd = false;
    double offdiag_norm = 0.0;  // ||X||_F
    bool re_positive_definite = false;
    bool re_negative_definite = false;
    bool im_positive_definite = false;
    bool im_negative_definite = false;
};

ZeroBlockVerdict zero_block_verdict(const HermitianMatrix& a, const Matrix& x,
                                    double tol = kPsdTol);

}  // namespace psdblock
