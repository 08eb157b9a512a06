#include <cmath>

#include <doctest.h>

#include "psdblock/constructions.hpp"
#include "psdblock/linalg.hpp"
#include "psdblock/norms.hpp"

using namespace psdblock;

namespace {

// closed-form spectrum of M_{3/10}
const double kMx1 = (149.0 + std::sqrt(12401.0)) / 200.0;
const double kMx2 = (129.0 + std::sqrt(14761.0)) / 200.0;
const double kMx3 = (149.0 - std::sqrt(12401.0)) / 200.0;
const double kMx4 = (129.0 - std::sqrt(14761.0)) / 200.0;

}  // namespace

TEST_CASE("singular values of the worked examples") {
    const SingularSpectrum mx = singular_values(example_Mx(0.3).assembled());
    REQUIRE(mx.size() == 4);
    CHECK(mx.values(0) == doctest::Approx(kMx1).epsilon(1e-12));
    CHECK(mx.values(1) == doctest::Approx(kMx2).epsilon(1e-12));
    CHECK(mx.values(2) == doctest::Approx(kMx3).epsilon(1e-10));
    CHECK(mx.values(3) == doctest::Approx(kMx4).epsilon(1e-9));

    RealVector d(2);
    d << 1.29, 1.49;
    const SingularSpectrum diag = singular_values(HermitianMatrix::diagonal(d).mat());
    CHECK(diag.values(0) == doctest::Approx(1.49));
    CHECK(diag.values(1) == doctest::Approx(1.29));

    const SingularSpectrum ny = singular_values(example_Ny(0.5).assembled());
    REQUIRE(ny.size() == 4);
    CHECK(ny.values(0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(ny.values(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ny.values(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ny.values(3) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("ky_fan partial sums") {
    RealVector d(2);
    d << 1.29, 1.49;
    const Matrix diag = HermitianMatrix::diagonal(d).mat();
    CHECK(ky_fan(diag, 2) == doctest::Approx(2.78));

    const Matrix mx = example_Mx(0.3).assembled();
    CHECK(ky_fan(mx, 1) == doctest::Approx(kMx1).epsilon(1e-12));
    // trace = 0.3 + 0.99 + 0.99 + 0.5 for a PSD matrix
    CHECK(ky_fan(mx, 4) == doctest::Approx(2.78).epsilon(1e-12));
    // beyond the spectrum length the padding convention saturates
    CHECK(ky_fan(mx, 9) == doctest::Approx(ky_fan(mx, 4)));

    CHECK_THROWS_AS(ky_fan(diag, 0), InvalidArgumentError);
}

TEST_CASE("spectral, Frobenius and Schatten norms") {
    const PsdBlockMatrix c = example_C();
    CHECK(spectral_norm(c.assembled()) == doctest::Approx(3.008).epsilon(1e-3));

    const double y = 0.5;
    const Matrix ny = example_Ny(y).assembled();
    CHECK(frobenius_norm(ny) * frobenius_norm(ny) ==
          doctest::Approx(17.0 + y * y).epsilon(1e-12));

    RealVector d(2);
    d << 3.0, 4.0;
    CHECK(schatten(HermitianMatrix::diagonal(d).mat(), 2.0) == doctest::Approx(5.0));
    CHECK(schatten(HermitianMatrix::diagonal(d).mat(),
                   std::numeric_limits<double>::infinity()) == doctest::Approx(4.0));
    CHECK_THROWS_AS(schatten(ny, 0.5), InvalidArgumentError);

    // Frobenius equals Schatten-2 equals the l2 of the spectrum
    Rng rng(9);
    const Matrix g = rng.complex_gaussian_matrix(4, 4);
    CHECK(schatten(g, 2.0) == doctest::Approx(frobenius_norm(g)).epsilon(1e-12));
}

TEST_CASE("dominance verdicts on the worked-example comparisons") {
    const PsdBlockMatrix mx = example_Mx(0.3);
    const Matrix sum_mx = (mx.A.mat() + mx.B.mat()).eval();
    const DominanceReport dom = dominance(mx.assembled(), sum_mx);
    CHECK(dom.verdict == DominanceVerdict::dominated);
    REQUIRE(dom.margins.size() == 4);
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(dom.margins(k) >= -1e-10);
    CHECK(std::abs(dom.margins(3)) < 1e-10);  // trace equality at k = 4

    const PsdBlockMatrix c = example_C();
    const Matrix sum_c = (c.A.mat() + c.B.mat()).eval();
    const DominanceReport inc = dominance(c.assembled(), sum_c);
    CHECK(inc.verdict == DominanceVerdict::incomparable);
    CHECK(inc.margins(0) < 0.0);  // 3.008 > 3 at k = 1

    const DominanceReport eq = dominance(c.assembled(), c.assembled());
    CHECK(eq.verdict == DominanceVerdict::equal);
}

TEST_CASE("dominance zero-pads unequal spectra") {
    const PsdBlockMatrix mx = example_Mx(0.3);
    const Matrix sum2x2 = (mx.A.mat() + mx.B.mat()).eval();  // 2x2 vs 4x4
    const DominanceReport dom = dominance(mx.assembled(), sum2x2);
    CHECK(dom.margins.size() == 4);
    CHECK(dom.k_norms_rhs(3) == doctest::Approx(dom.k_norms_rhs(1)));
}

TEST_CASE("unitary invariance of Ky Fan norms") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 2 + trial % 4;
        const Matrix m = rng.complex_gaussian_matrix(n, n);
        const Matrix u = random_unitary(n, rng);
        const Matrix v = random_unitary(n, rng);
        const Matrix rotated = u * m * v.adjoint();
        for (Eigen::Index k = 1; k <= n; ++k) {
            const double lhs = ky_fan(rotated, k);
            const double rhs = ky_fan(m, k);
            CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, rhs));
        }
    }
}

TEST_CASE("partial sums are monotone and satisfy the triangle inequality") {
    Rng rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 1 + trial % 5;
        const Matrix l = rng.complex_gaussian_matrix(n, n);
        const Matrix r = rng.complex_gaussian_matrix(n, n);
        for (Eigen::Index k = 1; k < n; ++k)
            CHECK(ky_fan(l, k) <= ky_fan(l, k + 1) + 1e-12);
        for (Eigen::Index k = 1; k <= n; ++k)
            CHECK(ky_fan((l + r).eval(), k) <= ky_fan(l, k) + ky_fan(r, k) + 1e-9);
    }
}

TEST_CASE("PSD singular values equal eigenvalues") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        const HermitianMatrix m = random_psd(n, rng);
        const SingularSpectrum sv = singular_values(m.mat());
        const RealVector eig = hermitian_eigenvalues(m);
        for (Eigen::Index i = 0; i < n; ++i)
            CHECK(std::abs(sv.values(i) - eig(n - 1 - i)) <
                  1e-10 * std::max(1.0, eig(n - 1)));
    }
}

TEST_CASE("embedding A in a larger zero matrix changes no Ky Fan norm") {
    Rng rng(47);
    const Matrix a = rng.complex_gaussian_matrix(3, 3);
    Matrix padded = Matrix::Zero(6, 6);
    padded.topLeftCorner(3, 3) = a;
    for (Eigen::Index k = 1; k <= 6; ++k)
        CHECK(ky_fan(padded, k) == doctest::Approx(ky_fan(a, k)).epsilon(1e-12));
}

TEST_CASE("trace consistency for PSD block matrices") {
    Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 1 + trial % 3, m = 1 + (trial / 3) % 3;
        const PsdBlockMatrix blk = split(random_psd(n + m, rng), n);
        const double full = ky_fan(blk.assembled(), n + m);
        const double traces = blk.A.mat().trace().real() + blk.B.mat().trace().real();
        CHECK(std::abs(full - traces) < 1e-10 * std::max(1.0, traces));
    }
}
