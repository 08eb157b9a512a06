#include "psdblock/constructions.hpp"

#include <cmath>

#include "psdblock/errors.hpp"
#include "psdblock/linalg.hpp"

namespace psdblock {

AmplifierWitness amplify_offdiag(const HermitianMatrix& a, const Matrix& x, long l_max,
                                 double tol) {
    const Eigen::Index n = a.dim();
    if (x.rows() != n || x.cols() != n)
        throw DimensionMismatchError("amplify_offdiag: X must match A");
    if (!positivity(a).is_psd())
        throw NotPsdError("amplify_offdiag: A must be PSD");

    Matrix xi = x;
    PositivityVerdict iv = positivity(imag_part(xi));
    const bool i_definite =
        iv.is_pd() || iv.verdict == Definiteness::negative_definite;
    if (!i_definite) {
        // the block matrix with X -> iX is unitarily congruent to the
        // original and swaps the roles of R(X) and I(X)
        xi = Complex(0.0, 1.0) * x;
        iv = positivity(imag_part(xi));
        if (!iv.is_pd() && iv.verdict != Definiteness::negative_definite)
            throw InvalidArgumentError(
                "amplify_offdiag: neither I(X) nor R(X) is definite");
    }

    const SingularSpectrum base = singular_values(a.mat());
    for (long l = 1; l <= l_max; ++l) {
        Matrix amp(2 * n, 2 * n);
        amp.topLeftCorner(n, n) = a.mat();
        amp.topRightCorner(n, n) = static_cast<double>(l) * xi;
        amp.bottomLeftCorner(n, n) = static_cast<double>(l) * xi.adjoint();
        amp.bottomRightCorner(n, n) = Matrix::Zero(n, n);
        const DominanceReport rep = dominance(amp, a.mat(), tol);
        if (rep.verdict == DominanceVerdict::strictly_dominates) {
            AmplifierWitness w;
            w.l = l;
            w.amplified = HermitianMatrix(amp);
            w.dominance = rep;
            w.psd_verdict = positivity(w.amplified);
            return w;
        }
    }
    throw SearchExhaustedError("amplify_offdiag: no l <= " + std::to_string(l_max) +
                               " achieves strict dominance; raise l_max");
}

ScalingWitness find_scaling_t(const HermitianMatrix& a, const Matrix& x,
                              const HermitianMatrix& b, long t_max, double tol) {
    if (!positivity(a, tol).is_pd() || !positivity(b, tol).is_pd())
        throw NotPdError("find_scaling_t: A and B must be positive definite");
    for (long t = 1; t <= t_max; ++t) {
        const double td = static_cast<double>(t);
        const HermitianMatrix ta((td * a.mat()).eval());
        const HermitianMatrix tb((td * b.mat()).eval());
        if (schur_pd_test(ta, x, tb, /*strict=*/true, tol)) {
            ScalingWitness w;
            w.t = t;
            w.F_t = assemble(ta, x, tb, /*certify_psd=*/true, tol);
            w.certificate = positivity(HermitianMatrix(w.F_t.assembled()), tol);
            return w;
        }
    }
    throw SearchExhaustedError("find_scaling_t: no t <= " + std::to_string(t_max) +
                               " makes F_t positive definite");
}

PlpWitness build_plp(const RealVector& a, const RealVector& b, const Eigen::VectorXcd& x,
                     double tol) {
    const Eigen::Index n = a.size();
    if (b.size() != n || x.size() != n)
        throw DimensionMismatchError("build_plp: vectors must have equal length");
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = std::norm(x(i));
        if (a(i) < 0.0)
            throw InvalidArgumentError("build_plp: a[" + std::to_string(i) + "] must be >= 0");
        if (b(i) >= 0.0)
            throw InvalidArgumentError("build_plp: b[" + std::to_string(i) + "] must be < 0");
        if (a(i) + b(i) < 0.0)
            throw InvalidArgumentError("build_plp: a[" + std::to_string(i) +
                                       "] + b[i] must be >= 0");
        if (a(i) * b(i) - d >= 0.0)
            throw InvalidArgumentError("build_plp: a[" + std::to_string(i) +
                                       "]*b[i] - |x[i]|^2 must be < 0");
    }
    Matrix full = Matrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        full(i, i) = a(i);
        full(n + i, n + i) = b(i);
        full(i, n + i) = x(i);
        full(n + i, i) = std::conj(x(i));
    }
    PlpWitness w;
    w.N = HermitianMatrix(full);
    const Matrix sum = HermitianMatrix::diagonal(a + b).mat();
    w.report = dominance(full, sum, tol);
    return w;
}

PsdBlockMatrix example_Mx(double x) {
    RealVector da(2), db(2);
    da << x, 99.0 / 100.0;
    db << 99.0 / 100.0, 1.0 / 2.0;
    Matrix off = Matrix::Zero(2, 2);
    off(0, 0) = Complex(0.0, 0.5);
    off(1, 1) = Complex(0.0, -0.5);
    return assemble(HermitianMatrix::diagonal(da), off, HermitianMatrix::diagonal(db));
}

PsdBlockMatrix example_C() {
    Matrix a(2, 2), b(2, 2), off(2, 2);
    a << 4.0 / 3.0, 0.0, 0.0, 1.0;
    b << 3.0 / 2.0, 0.0, 0.0, 2.0;
    off << 1.0, -1.0, 0.0, 1.0 / 5.0;
    return assemble(HermitianMatrix(a), off, HermitianMatrix(b));
}

PsdBlockMatrix example_Ny(double y) {
    RealVector da(2), db(2);
    da << 2.0, y;
    db << 1.0, 2.0;
    Matrix off = Matrix::Zero(2, 2);
    off(0, 1) = 2.0;
    return assemble(HermitianMatrix::diagonal(da), off, HermitianMatrix::diagonal(db));
}

PsdBlockMatrix random_hermitian_offdiag_psd(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    return random_hermitian_offdiag_psd(n, rng);
}

PsdBlockMatrix random_hermitian_offdiag_psd(Eigen::Index n, Rng& rng) {
    if (n < 1) throw InvalidArgumentError("random_hermitian_offdiag_psd: n must be >= 1");
    // [S, S^{-1}H]* [S, S^{-1}H] has Hermitian off-diagonal block S* S^{-1} H = H;
    // a PSD block-diagonal bump keeps X unchanged and lifts the rank.
    const HermitianMatrix base = random_psd(n, rng);
    const HermitianMatrix s =
        sqrt_psd(HermitianMatrix((base.mat() + Matrix::Identity(n, n) * 0.5).eval()));
    const HermitianMatrix hh(rng.complex_gaussian_matrix(n, n));  // symmetrized Gaussian
    const Matrix y = s.mat().inverse() * hh.mat();
    const HermitianMatrix a((s.mat() * s.mat() + random_psd(n, rng).mat()).eval());
    const HermitianMatrix b((y.adjoint() * y + random_psd(n, rng).mat()).eval());
    return assemble(a, hh.mat(), b, /*certify_psd=*/true);
}

PsdBlockMatrix random_commuting_normal_instance(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    return random_commuting_normal_instance(n, rng);
}

PsdBlockMatrix random_commuting_normal_instance(Eigen::Index n, Rng& rng) {
    if (n < 1)
        throw InvalidArgumentError("random_commuting_normal_instance: n must be >= 1");
    const Matrix w = random_unitary(n, rng);
    RealVector da(n), db(n);
    Eigen::VectorXcd dx(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        da(i) = rng.uniform() * 2.0;
        db(i) = rng.uniform() * 2.0;
        // |dx_i|^2 <= da_i db_i keeps every per-index 2x2 minor PSD
        const double r = rng.uniform() * std::sqrt(da(i) * db(i));
        const double theta = rng.uniform() * 2.0 * std::numbers::pi;
        dx(i) = Complex(r * std::cos(theta), r * std::sin(theta));
    }
    const HermitianMatrix a((w * HermitianMatrix::diagonal(da).mat() * w.adjoint()).eval());
    const HermitianMatrix b((w * HermitianMatrix::diagonal(db).mat() * w.adjoint()).eval());
    const Matrix x = w * dx.asDiagonal() * w.adjoint();
    return assemble(a, x, b, /*certify_psd=*/true);
}

}  // namespace psdblock
