#pragma once

#include <cstdint>

#include "psdblock/rng.hpp"
#include "psdblock/types.hpp"

namespace psdblock {

/// Symmetrize a square matrix to (M + M*)/2, failing if the anti-Hermitian
/// residue exceeds tol relative to max(1, ||M||_F).
HermitianMatrix hermitize(const Matrix& m, double tol = kHermTol);

/// (X + X*)/2
HermitianMatrix real_part(const Matrix& x);

/// (X - X*)/(2i)
HermitianMatrix imag_part(const Matrix& x);

/// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const HermitianMatrix& m);

/// Definiteness classification from the full spectrum. An eigenvalue counts
/// as nonnegative iff it is >= -tol * max(1, |lambda_max|).
PositivityVerdict positivity(const HermitianMatrix& m, double tol = kPsdTol);

/// (X*X)^{1/2}; its eigenvalues are the singular values of X.
HermitianMatrix matrix_abs(const Matrix& x);

/// PSD square root via spectral decomposition, clamping tiny negative
/// eigenvalues to zero.
HermitianMatrix sqrt_psd(const HermitianMatrix& m, double tol = kPsdTol);

/// ||PQ - QP||_F <= tol * max(1, ||P||_F ||Q||_F)
bool commutes(const Matrix& p, const Matrix& q, double tol = kPsdTol);

/// Entrywise test |x_ij (a_i - a_j)| <= tol, equivalent to commutation with
/// diag(a).
bool commutes_with_diagonal(const Matrix& x, const RealVector& a, double tol = kPsdTol);

/// G*G for G an n x n complex standard-normal matrix from the given seed.
HermitianMatrix random_psd(Eigen::Index n, std::uint64_t seed);
HermitianMatrix random_psd(Eigen::Index n, Rng& rng);

/// Haar-ish random unitary from the QR factorization of a Gaussian matrix.
Matrix random_unitary(Eigen::Index n, Rng& rng);

/// Build the block object; dimensions must agree.
PsdBlockMatrix assemble(const HermitianMatrix& a, const Matrix& x, const HermitianMatrix& b,
                        bool certify_psd = false, double tol = kPsdTol);

/// Cut a Hermitian matrix into blocks at row/column n.
PsdBlockMatrix split(const HermitianMatrix& m, Eigen::Index n, bool certify_psd = false,
                     double tol = kPsdTol);

}  // namespace psdblock
