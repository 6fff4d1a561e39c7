#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "hcs/hns.hpp"

namespace hcs {

struct SeriesResult {
    HyperNum value;
    unsigned terms_used = 0; // highest power included when the stop rule fired
};

/// Power series sum_{s=0..K} M^s / s!, stopping once the infinity norm of
/// the newest term drops to tol. Throws ConvergenceError past max_terms and
/// NoUnitError when the algebra has no identity (the s = 0 term).
SeriesResult exp_series(const HyperNum& m, double tol = 1e-14,
                        unsigned max_terms = 200);

/// exp(Psi(M)) applied to the unit element's coefficient vector, with the
/// matrix exponential computed by scaling-and-squaring over a degree-13 Pade
/// core.
HyperNum exp_matrix(const HyperNum& m);

/// Fundamental-solution route: one e^{lambda t} mode per real eigenvalue of
/// Psi(M), an (e^{at} cos bt, e^{at} sin bt) mode pair per conjugate pair;
/// the mode weights come from one dense solve against the unit element at
/// t = 0, and the result is the combination evaluated at t = 1. Throws
/// DegenerateSpectrumError when the mode matrix is numerically singular
/// (defective Psi); callers fall back to exp_matrix.
HyperNum exp_eigen(const HyperNum& m, double rcond_tol = 1e-12);

/// Closed form on the 4-dimensional cyclic system: with
/// alpha1 = m1+m3, alpha2 = m1-m3, beta1 = m2+m4, beta2 = m2-m4,
/// Exp = 1/2 [ (e^a1 cosh b1 + e^a2 cos b2),
///             (e^a1 sinh b1 + e^a2 sin b2),
///             (e^a1 cosh b1 - e^a2 cos b2),
///             (e^a1 sinh b1 - e^a2 sin b2) ].
/// The betas are forced over (m2, m4) by the eigenvalues
/// m1-m3 +- i(m2-m4); the variant over (m3, m4) that circulates in print is
/// kept in the test suite as a negative oracle.
HyperNum exp_closed_g47(const HyperNum& m);

/// The 25 constants of the 5-dimensional closed form, computed from the
/// order-5 Fourier cosine/sine vectors (never hard-coded decimals):
/// C1_i = 1/5, C2_i = (2/5)cos(2pi(i-1)/5), F2_i = (2/5)sin(2pi(i-1)/5),
/// C3_i = (2/5)cos(4pi(i-1)/5), F3_i = (2/5)sin(4pi(i-1)/5).
struct G51Constants {
    std::array<double, 5> C1{}, C2{}, F2{}, C3{}, F3{};
};

const G51Constants& g51_constants();

/// Closed form on the 5-dimensional cyclic system:
/// Exp(M)_i = (1/5)e^{l1} + e^{re z1}(C2_i cos(im z1) + F2_i sin(im z1))
///                        + e^{re z2}(C3_i cos(im z2) + F3_i sin(im z2)),
/// with l1 = sum m_i and z1, z2 the circulant eigenvalues at k = 1, 2. The
/// imaginary parts keep the sign carried at those indices: the constants are
/// bound to the Fourier row, and conjugating an eigenvalue together with
/// negating its sin-constants leaves the value unchanged, which is the
/// conjugation invariance the im > 0 spectrum convention relies on.
HyperNum exp_closed_g51(const HyperNum& m);

/// DFT route for every cyclic system: coefficients = inverse discrete
/// Fourier transform of exp(circulant_eigenvalues(m)). The imaginary residue
/// must stay below imag_tol relative to the largest coefficient magnitude;
/// a larger residue signals an internal inconsistency and throws.
HyperNum exp_cyclic_dft(const HyperNum& m, double imag_tol = 1e-10);

/// One Exp evaluated through every method applicable to the system, with the
/// worst pairwise deviation and any per-method failures.
struct ExpReport {
    HyperNum input;
    std::map<std::string, HyperNum> results;   // method name -> value
    std::map<std::string, std::string> errors; // method name -> reason
    double max_pairwise_deviation = 0.0;
    std::optional<unsigned> terms_used;        // series bookkeeping

    bool within(double tol) const { return max_pairwise_deviation <= tol; }
};

/// Runs series, matrix, and eigen on every system, plus the closed form and
/// DFT routes on cyclic systems. Method failures are recorded in the report
/// rather than thrown.
ExpReport crosscheck_exp(const HyperNum& m, double series_tol = 1e-14);

} // namespace hcs
