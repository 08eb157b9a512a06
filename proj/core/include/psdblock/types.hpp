#pragma once

#include <complex>

#include <Eigen/Dense>

#include "psdblock/errors.hpp"

namespace psdblock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Default relative tolerance for positivity decisions.
inline constexpr double kPsdTol = 1e-10;
/// Default relative tolerance for hermitize() residues.
inline constexpr double kHermTol = 1e-12;
/// Default tolerance for norm comparisons and strictness decisions.
inline constexpr double kNormTol = 1e-9;

/// Square matrix stored exactly as (M + M*)/2.
///
/// Construction symmetrizes; use hermitize() when the input should be
/// certified close to Hermitian beforehand.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    explicit HermitianMatrix(const Matrix& m) {
        if (m.rows() != m.cols())
            throw NotSquareError("HermitianMatrix: input is not square");
        mat_ = (m + m.adjoint()) / 2.0;
    }

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }

    static HermitianMatrix zero(Eigen::Index n) { return HermitianMatrix(Matrix::Zero(n, n)); }
    static HermitianMatrix identity(Eigen::Index n) { return HermitianMatrix(Matrix::Identity(n, n)); }
    static HermitianMatrix diagonal(const RealVector& d) {
        Matrix m = Matrix::Zero(d.size(), d.size());
        for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
        return HermitianMatrix(m);
    }

private:
    Matrix mat_;
};

/// M = [[A, X], [X*, B]] with block sizes (n, m).
struct PsdBlockMatrix {
    Eigen::Index n = 0;
    Eigen::Index m = 0;
    HermitianMatrix A;
    Matrix X;
    HermitianMatrix B;
    bool psd_certified = false;

    /// The full (n+m) x (n+m) Hermitian matrix.
    Matrix assembled() const {
        Matrix full(n + m, n + m);
        full.topLeftCorner(n, n) = A.mat();
        full.topRightCorner(n, m) = X;
        full.bottomLeftCorner(m, n) = X.adjoint();
        full.bottomRightCorner(m, m) = B.mat();
        return full;
    }
};

enum class Definiteness {
    positive_definite,
    positive_semidefinite,
    indefinite,
    negative_semidefinite,
    negative_definite,
};

struct PositivityVerdict {
    Definiteness verdict = Definiteness::indefinite;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    double tolerance_used = kPsdTol;

    bool is_psd() const {
        return verdict == Definiteness::positive_definite ||
               verdict == Definiteness::positive_semidefinite;
    }
    bool is_pd() const { return verdict == Definiteness::positive_definite; }
};

const char* to_string(Definiteness d);

}  // namespace psdblock
