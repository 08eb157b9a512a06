#pragma once

#include <cstdint>

#include "psdblock/criteria.hpp"
#include "psdblock/norms.hpp"
#include "psdblock/rng.hpp"
#include "psdblock/types.hpp"

namespace psdblock {

/// [[A, lX], [lX*, 0]] with the smallest integer l whose Ky Fan norms all
/// strictly exceed those of A; never PSD.
struct AmplifierWitness {
    long l = 0;
    HermitianMatrix amplified;
    DominanceReport dominance;  // amplified vs A ⊕ 0; strictly_dominates
    PositivityVerdict psd_verdict;
};

/// Minimal integer t with [[tA, X], [X*, tB]] positive definite.
struct ScalingWitness {
    long t = 0;
    PsdBlockMatrix F_t;
    PositivityVerdict certificate;
};

/// Requires A PSD and I(X) definite; R(X)-definite inputs are first rotated
/// X -> iX (a unitary congruence of the block matrix). Scans l = 1..l_max.
AmplifierWitness amplify_offdiag(const HermitianMatrix& a, const Matrix& x, long l_max = 1024,
                                 double tol = kNormTol);

/// Requires A, B positive definite. Scans t = 1..t_max with the Schur test.
ScalingWitness find_scaling_t(const HermitianMatrix& a, const Matrix& x, const HermitianMatrix& b,
                              long t_max = 1 << 20, double tol = kPsdTol);

/// N = [[diag(a), diag(x)], [diag(x)*, diag(b)]] with a_i >= 0, b_i < 0,
/// a_i + b_i >= 0 and a_i b_i - |x_i|^2 < 0; the report shows N strictly
/// dominating diag(a) + diag(b) at every k.
struct PlpWitness {
    HermitianMatrix N;
    DominanceReport report;
};

PlpWitness build_plp(const RealVector& a, const RealVector& b, const Eigen::VectorXcd& x,
                     double tol = kNormTol);

/// A = diag(x, 99/100), B = diag(99/100, 1/2), X = [[i/2, 0], [0, -i/2]].
PsdBlockMatrix example_Mx(double x);

/// The fixed 4x4 positive definite counterexample to ||M|| <= ||A+B||.
PsdBlockMatrix example_C();

/// A = diag(2, y), B = diag(1, 2), X = [[0, 2], [0, 0]]; eigenvalues
/// {4, 1, y, 0}.
PsdBlockMatrix example_Ny(double y);

/// Random PSD block matrix whose off-diagonal block is exactly Hermitian.
PsdBlockMatrix random_hermitian_offdiag_psd(Eigen::Index n, std::uint64_t seed);
PsdBlockMatrix random_hermitian_offdiag_psd(Eigen::Index n, Rng& rng);

/// A, B, X simultaneously diagonalized by a common random unitary, with the
/// per-index 2x2 minors PSD; X normal, X* commutes with A, X commutes with B.
PsdBlockMatrix random_commuting_normal_instance(Eigen::Index n, std::uint64_t seed);
PsdBlockMatrix random_commuting_normal_instance(Eigen::Index n, Rng& rng);

}  // namespace psdblock
