#pragma once

#include "psdblock/linalg.hpp"
#include "psdblock/types.hpp"

namespace psdblock {

/// M = U P U* + V Q V* with unitary U, V and PSD summands P = P_block ⊕ 0,
/// Q = 0 ⊕ Q_block (the zero blocks are exact zeros by construction).
struct Decomposition {
    Matrix U;
    Matrix V;
    HermitianMatrix P;  // supported on the top-left block
    HermitianMatrix Q;  // supported on the bottom-right block
    double residual = 0.0;

    Matrix p_block(Eigen::Index n) const { return P.mat().topLeftCorner(n, n); }
    Matrix q_block(Eigen::Index m) const { return Q.mat().bottomRightCorner(m, m); }
};

/// M <= (1/2)(U (bound_P ⊕ 0) U* + V (0 ⊕ bound_Q) V*), the |X - X*| bound.
struct AbsBound {
    HermitianMatrix bound_P;  // block-sized: A + B + |X - X*|
    HermitianMatrix bound_Q;
    Matrix U;
    Matrix V;
    RealVector gap_spectrum;  // eigenvalues of the bound minus M, ascending
};

/// M = U (A ⊕ 0) U* + V (0 ⊕ B) V* with explicit unitaries recovered from
/// the SVD of the square-root factors. Works for any block sizes n, m.
Decomposition lemma1_decompose(const PsdBlockMatrix& m, double tol = kPsdTol);

/// Equal-size blocks: summands (A+B)/2 - R(X) and (A+B)/2 + R(X).
Decomposition corollary_R_decompose(const PsdBlockMatrix& m, double tol = kPsdTol);

/// Equal-size blocks: summands (A+B)/2 + I(X) and (A+B)/2 - I(X).
Decomposition corollary_I_decompose(const PsdBlockMatrix& m, double tol = kPsdTol);

/// Equal-size blocks: bound blocks A + B + |X - X*| with the gap spectrum of
/// the half-sum minus M.
AbsBound corollary_abs_bound(const PsdBlockMatrix& m, double tol = kPsdTol);

/// Relative reconstruction residual ||M - UPU* - VQV*||_F / max(1, ||M||_F).
/// Throws if U or V fails the unitarity check.
double verify_decomposition(const PsdBlockMatrix& m, const Decomposition& d,
                            double unitary_tol = kPsdTol);

}  // namespace psdblock
