#include <cmath>

#include <doctest.h>

#include "psdblock/constructions.hpp"
#include "psdblock/linalg.hpp"

using namespace psdblock;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("amplify_offdiag on A = I, X = iI") {
    const AmplifierWitness w =
        amplify_offdiag(HermitianMatrix::identity(2), I * Matrix::Identity(2, 2));
    CHECK(w.l == 1);
    // per-coordinate quadratic mu^2 - mu - 1 gives s = (sqrt(5) +/- 1)/2
    const SingularSpectrum sv = singular_values(w.amplified.mat());
    const double s_plus = (std::sqrt(5.0) + 1.0) / 2.0;
    const double s_minus = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(sv.values(0) == doctest::Approx(s_plus).epsilon(1e-12));
    CHECK(sv.values(1) == doctest::Approx(s_plus).epsilon(1e-12));
    CHECK(sv.values(2) == doctest::Approx(s_minus).epsilon(1e-12));
    CHECK(sv.values(3) == doctest::Approx(s_minus).epsilon(1e-12));
    CHECK(w.dominance.verdict == DominanceVerdict::strictly_dominates);
    for (Eigen::Index k = 0; k < w.dominance.margins.size(); ++k)
        CHECK(w.dominance.margins(k) < 0.0);  // amplified exceeds A at every k
    CHECK(w.psd_verdict.verdict == Definiteness::indefinite);
}

TEST_CASE("amplify_offdiag with a zero diagonal block") {
    const AmplifierWitness w = amplify_offdiag(HermitianMatrix::zero(1), I * Matrix::Ones(1, 1));
    CHECK(w.l == 1);
    const SingularSpectrum sv = singular_values(w.amplified.mat());
    CHECK(sv.values(0) == doctest::Approx(1.0));
    CHECK(sv.values(1) == doctest::Approx(1.0));
}

TEST_CASE("amplifier strictness persists beyond the witness l") {
    const HermitianMatrix a((10.0 * Matrix::Identity(2, 2)).eval());
    const AmplifierWitness w = amplify_offdiag(a, I * Matrix::Identity(2, 2));
    CHECK(w.l >= 1);
    CHECK(w.dominance.verdict == DominanceVerdict::strictly_dominates);
    CHECK(w.psd_verdict.verdict == Definiteness::indefinite);
    // strictness persists at l + 1
    Matrix amp(4, 4);
    const double l1 = static_cast<double>(w.l + 1);
    amp.topLeftCorner(2, 2) = a.mat();
    amp.topRightCorner(2, 2) = l1 * I * Matrix::Identity(2, 2);
    amp.bottomLeftCorner(2, 2) = (l1 * I * Matrix::Identity(2, 2)).adjoint();
    amp.bottomRightCorner(2, 2) = Matrix::Zero(2, 2);
    CHECK(dominance(amp, a.mat()).verdict == DominanceVerdict::strictly_dominates);
}

TEST_CASE("amplify_offdiag rotates R-definite inputs and rejects indefinite ones") {
    // R(X) = I is definite, I(X) = 0 is not: the iX rotation applies
    const AmplifierWitness w =
        amplify_offdiag(HermitianMatrix::identity(2), Matrix::Identity(2, 2));
    CHECK(w.l >= 1);
    CHECK(w.psd_verdict.verdict == Definiteness::indefinite);

    // both R(X) and I(X) indefinite
    Matrix mixed = Matrix::Zero(2, 2);
    mixed(0, 0) = 1.0;
    mixed(1, 1) = -1.0;
    CHECK_THROWS_AS(amplify_offdiag(HermitianMatrix::identity(2), mixed),
                    InvalidArgumentError);
}

TEST_CASE("find_scaling_t") {
    Matrix one(1, 1), two(1, 1);
    one(0, 0) = 1.0;
    two(0, 0) = 2.0;
    const ScalingWitness w =
        find_scaling_t(HermitianMatrix(one), two, HermitianMatrix(one));
    CHECK(w.t == 3);  // need t^2 > 4
    CHECK(w.certificate.verdict == Definiteness::positive_definite);
    CHECK_FALSE(schur_pd_test(HermitianMatrix((2.0 * one).eval()), two,
                              HermitianMatrix((2.0 * one).eval())));

    const ScalingWitness trivial =
        find_scaling_t(HermitianMatrix::identity(2), Matrix::Zero(2, 2),
                       HermitianMatrix::identity(2));
    CHECK(trivial.t == 1);

    const ScalingWitness rot = find_scaling_t(HermitianMatrix::identity(2),
                                              I * Matrix::Identity(2, 2),
                                              HermitianMatrix::identity(2));
    CHECK(rot.t == 2);  // need t^2 > 1

    CHECK_THROWS_AS(find_scaling_t(HermitianMatrix::zero(1), one, HermitianMatrix(one)),
                    NotPdError);
    CHECK_THROWS_AS(
        find_scaling_t(HermitianMatrix(one), (100.0 * two).eval(), HermitianMatrix(one), 10),
        SearchExhaustedError);
}

TEST_CASE("build_plp") {
    RealVector a1(1), b1(1);
    a1 << 1.0;
    b1 << -1.0;
    Eigen::VectorXcd x0 = Eigen::VectorXcd::Zero(1);
    const PlpWitness diag = build_plp(a1, b1, x0);
    const SingularSpectrum sv = singular_values(diag.N.mat());
    CHECK(sv.values(0) == doctest::Approx(1.0));
    CHECK(sv.values(1) == doctest::Approx(1.0));
    CHECK(diag.report.verdict == DominanceVerdict::strictly_dominates);

    RealVector a2(1), b2(1);
    a2 << 2.0;
    b2 << -1.0;
    Eigen::VectorXcd xs(1);
    xs(0) = std::sqrt(3.0);
    const PlpWitness w = build_plp(a2, b2, xs);
    const SingularSpectrum s2 = singular_values(w.N.mat());
    CHECK(s2.values(0) == doctest::Approx((std::sqrt(21.0) + 1.0) / 2.0).epsilon(1e-12));
    CHECK(s2.values(1) == doctest::Approx((std::sqrt(21.0) - 1.0) / 2.0).epsilon(1e-12));
    CHECK(w.report.verdict == DominanceVerdict::strictly_dominates);
    CHECK(positivity(w.N).verdict == Definiteness::indefinite);
    CHECK(positivity(HermitianMatrix((-w.N.mat()).eval())).verdict ==
          Definiteness::indefinite);

    RealVector a3(2), b3(2);
    a3 << 1.0, 1.0;
    b3 << -1.0, -1.0;
    Eigen::VectorXcd x3(2);
    x3 << 1.0, 2.0;
    const PlpWitness pair = build_plp(a3, b3, x3);
    CHECK(pair.report.verdict == DominanceVerdict::strictly_dominates);
    // per-pair quadratics mu^2 - (1 + d_i) = 0
    const SingularSpectrum s3 = singular_values(pair.N.mat());
    CHECK(s3.values(0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    // each precondition is validated
    RealVector bad_b(1);
    bad_b << 0.5;
    CHECK_THROWS_AS(build_plp(a1, bad_b, x0), InvalidArgumentError);
    RealVector small_a(1);
    small_a << 0.5;
    CHECK_THROWS_AS(build_plp(small_a, b1, x0), InvalidArgumentError);  // a + b < 0
    RealVector big_b(1);
    big_b << -0.1;
    // a*b - d = -0.1 < 0 is fine; but x = 0 with a*b = 0 fails
    RealVector zero_a(1);
    zero_a << 0.0;
    CHECK_THROWS_AS(build_plp(zero_a, b1, x0), InvalidArgumentError);  // a + b < 0 again
}

TEST_CASE("plp sign pattern: each quadratic has one root of each sign") {
    Rng rng(149);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n = 1 + trial % 4;
        RealVector a(n), b(n), d(n);
        Eigen::VectorXcd x(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            b(i) = -(0.1 + rng.uniform());
            a(i) = -b(i) + rng.uniform();  // a + b >= 0
            const double need = std::sqrt(std::max(a(i) * b(i), 0.0) + 0.1);
            x(i) = Complex(need + rng.uniform(), rng.uniform());
            d(i) = std::norm(x(i));
        }
        const PlpWitness w = build_plp(a, b, x);
        CHECK(w.report.verdict == DominanceVerdict::strictly_dominates);
        const auto pairs = pww_eigenvalues(a, b, d);
        for (const auto& p : pairs) {
            CHECK(p.root_a > 0.0);
            CHECK(p.root_b < 0.0);
            CHECK(p.root_a + p.root_b >= -1e-12);
        }
    }
}

TEST_CASE("example factories match the printed matrices") {
    const PsdBlockMatrix mx = example_Mx(0.3);
    CHECK(std::abs(mx.A.mat()(0, 0) - Complex(0.3)) < 1e-15);
    CHECK(std::abs(mx.A.mat()(1, 1) - Complex(0.99)) < 1e-15);
    CHECK(std::abs(mx.X(0, 0) - I * 0.5) < 1e-15);
    CHECK(std::abs(mx.X(1, 1) + I * 0.5) < 1e-15);
    CHECK(positivity(HermitianMatrix(example_Mx(0.5).assembled())).is_pd());
    // below the PD window the first quadratic produces a negative root
    CHECK_FALSE(positivity(HermitianMatrix(example_Mx(0.0).assembled())).is_psd());

    const PsdBlockMatrix c = example_C();
    CHECK(std::abs(c.assembled()(0, 0) - Complex(4.0 / 3.0)) < 1e-15);
    CHECK(std::abs(c.assembled()(0, 3) - Complex(-1.0)) < 1e-15);
    CHECK(std::abs(c.assembled()(1, 3) - Complex(0.2)) < 1e-15);
    const double trace = ky_fan(c.assembled(), 4);
    CHECK(trace == doctest::Approx(35.0 / 6.0).epsilon(1e-12));

    for (double y : {0.0, 0.5, 0.99}) {
        const RealVector eig =
            hermitian_eigenvalues(HermitianMatrix(example_Ny(y).assembled()));
        CHECK(eig(3) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(eig(2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eig(1) == doctest::Approx(y).scale(1.0).epsilon(1e-12));
        CHECK(std::abs(eig(0)) < 1e-12);
    }
    // at y = 1 the Frobenius comparison is tight
    const Matrix n1 = example_Ny(1.0).assembled();
    const Matrix sum1 = (example_Ny(1.0).A.mat() + example_Ny(1.0).B.mat()).eval();
    CHECK(frobenius_norm(n1) * frobenius_norm(n1) ==
          doctest::Approx(frobenius_norm(sum1) * frobenius_norm(sum1)).epsilon(1e-12));
}

TEST_CASE("example Mx is PD across its parameter window and matches its quadratics") {
    for (double x : {0.3, 0.4, 0.5}) {
        const PsdBlockMatrix m = example_Mx(x);
        CHECK(positivity(HermitianMatrix(m.assembled())).is_pd());
        RealVector lambda(2), nu(2), d(2);
        lambda << x, 0.99;
        nu << 0.99, 0.5;
        d << 0.25, 0.25;
        std::vector<double> roots;
        for (const auto& p : pww_eigenvalues(lambda, nu, d)) {
            roots.push_back(p.root_a);
            roots.push_back(p.root_b);
        }
        std::sort(roots.begin(), roots.end());
        const RealVector eig = hermitian_eigenvalues(HermitianMatrix(m.assembled()));
        for (Eigen::Index i = 0; i < 4; ++i)
            CHECK(eig(i) == doctest::Approx(roots[static_cast<std::size_t>(i)]).epsilon(1e-10));
    }
}

TEST_CASE("random ensembles are deterministic and satisfy their contracts") {
    const PsdBlockMatrix h1 = random_hermitian_offdiag_psd(3, 77);
    const PsdBlockMatrix h2 = random_hermitian_offdiag_psd(3, 77);
    CHECK((h1.assembled() - h2.assembled()).norm() == 0.0);
    CHECK(h1.psd_certified);
    CHECK((h1.X - h1.X.adjoint()).norm() <= 1e-12);

    const PsdBlockMatrix s1 = random_hermitian_offdiag_psd(1, 5);
    CHECK(std::abs(s1.X(0, 0).imag()) < 1e-12);  // scalar Hermitian X is real

    const PsdBlockMatrix c1 = random_commuting_normal_instance(4, 31);
    const PsdBlockMatrix c2 = random_commuting_normal_instance(4, 31);
    CHECK((c1.assembled() - c2.assembled()).norm() == 0.0);
    CHECK(c1.psd_certified);
    CHECK(commutes(c1.X.adjoint(), c1.A.mat(), 1e-9));
    CHECK(commutes(c1.X, c1.B.mat(), 1e-9));
    CHECK((c1.X.adjoint() * c1.X - c1.X * c1.X.adjoint()).norm() < 1e-9);
}
