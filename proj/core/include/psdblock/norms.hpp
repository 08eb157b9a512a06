#pragma once

#include "psdblock/types.hpp"

namespace psdblock {

/// Descending nonnegative singular values with Ky Fan partial-sum access.
/// Indices past the end follow the A ⊕ 0 embedding (zero padding), so Ky Fan
/// sums are defined for every k >= 1.
struct SingularSpectrum {
    RealVector values;  // descending, >= 0

    Eigen::Index size() const { return values.size(); }

    /// Sum of the k largest singular values; k past the end saturates.
    double ky_fan(Eigen::Index k) const {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < std::min(k, values.size()); ++i) sum += values(i);
        return sum;
    }
};

SingularSpectrum singular_values(const Matrix& m);

/// Ky Fan k-norm: sum of the k largest singular values.
double ky_fan(const Matrix& m, Eigen::Index k);

double spectral_norm(const Matrix& m);
double frobenius_norm(const Matrix& m);

/// Schatten p-norm, p >= 1.
double schatten(const Matrix& m, double p);

enum class DominanceVerdict {
    dominated,
    strictly_dominated_by,
    dominates,
    strictly_dominates,
    incomparable,
    equal,
};

const char* to_string(DominanceVerdict v);

/// Per-k comparison of Ky Fan norms; spectra of unequal length are
/// zero-padded (the ||A|| = ||A ⊕ 0|| convention).
struct DominanceReport {
    RealVector k_norms_lhs;
    RealVector k_norms_rhs;
    RealVector margins;  // rhs_k - lhs_k
    DominanceVerdict verdict = DominanceVerdict::incomparable;
    double tolerance = kNormTol;

    /// True when the left side is <= the right side in every symmetric norm.
    bool lhs_dominated() const {
        return verdict == DominanceVerdict::dominated ||
               verdict == DominanceVerdict::strictly_dominated_by ||
               verdict == DominanceVerdict::equal;
    }
};

DominanceReport dominance(const Matrix& lhs, const Matrix& rhs, double tol = kNormTol);
DominanceReport dominance(const SingularSpectrum& lhs, const SingularSpectrum& rhs,
                          double tol = kNormTol);

}  // namespace psdblock
