#include "psdblock/norms.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "psdblock/errors.hpp"

namespace psdblock {

const char* to_string(DominanceVerdict v) {
    switch (v) {
        case DominanceVerdict::dominated: return "dominated";
        case DominanceVerdict::strictly_dominated_by: return "strictly_dominated_by";
        case DominanceVerdict::dominates: return "dominates";
        case DominanceVerdict::strictly_dominates: return "strictly_dominates";
        case DominanceVerdict::incomparable: return "incomparable";
        case DominanceVerdict::equal: return "equal";
    }
    return "incomparable";
}

SingularSpectrum singular_values(const Matrix& m) {
    if (m.size() == 0) return {RealVector(0)};
    Eigen::JacobiSVD<Matrix> svd(m);
    if (svd.info() != Eigen::Success) throw SvdError("singular_values: SVD failed");
    RealVector sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i) sv(i) = std::max(sv(i), 0.0);
    return {sv};
}

double ky_fan(const Matrix& m, Eigen::Index k) {
    if (k < 1) throw InvalidArgumentError("ky_fan: k must be >= 1");
    return singular_values(m).ky_fan(k);
}

double spectral_norm(const Matrix& m) { return ky_fan(m, 1); }

double frobenius_norm(const Matrix& m) { return m.norm(); }

double schatten(const Matrix& m, double p) {
    if (p < 1.0) throw InvalidArgumentError("schatten: p must be >= 1");
    const SingularSpectrum s = singular_values(m);
    if (std::isinf(p)) return s.size() ? s.values(0) : 0.0;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) sum += std::pow(s.values(i), p);
    return std::pow(sum, 1.0 / p);
}

DominanceReport dominance(const SingularSpectrum& lhs, const SingularSpectrum& rhs, double tol) {
    const Eigen::Index kmax = std::max(lhs.size(), rhs.size());
    DominanceReport rep;
    rep.tolerance = tol;
    rep.k_norms_lhs.resize(kmax);
    rep.k_norms_rhs.resize(kmax);
    rep.margins.resize(kmax);
    bool all_le = true, all_ge = true, all_lt = true, all_gt = true, all_eq = true;
    for (Eigen::Index k = 1; k <= kmax; ++k) {
        const double l = lhs.ky_fan(k);
        const double r = rhs.ky_fan(k);
        const double margin = r - l;
        rep.k_norms_lhs(k - 1) = l;
        rep.k_norms_rhs(k - 1) = r;
        rep.margins(k - 1) = margin;
        all_le &= margin >= -tol;
        all_ge &= margin <= tol;
        all_lt &= margin > tol;
        all_gt &= margin < -tol;
        all_eq &= std::abs(margin) <= tol;
    }
    if (all_eq)
        rep.verdict = DominanceVerdict::equal;
    else if (all_lt)
        rep.verdict = DominanceVerdict::strictly_dominated_by;
    else if (all_gt)
        rep.verdict = DominanceVerdict::strictly_dominates;
    else if (all_le)
        rep.verdict = DominanceVerdict::dominated;
    else if (all_ge)
        rep.verdict = DominanceVerdict::dominates;
    else
        rep.verdict = DominanceVerdict::incomparable;
    return rep;
}

DominanceReport dominance(const Matrix& lhs, const Matrix& rhs, double tol) {
    return dominance(singular_values(lhs), singular_values(rhs), tol);
}

}  // namespace psdblock
