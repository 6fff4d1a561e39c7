#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hcs/hns.hpp"

namespace hcs {

/// Left-multiplication matrix of M: vector(M*X) = Psi * vector(X) for all X.
/// Built directly from the structure constants:
/// Psi(k, j) = sum_i m_i * coeff(i, j -> k).
Eigen::MatrixXd assoc_matrix(const HyperNum& m);

/// Real/complex-pair decomposition of an eigenvalue multiset.
struct Spectrum {
    std::vector<double> reals;                // ascending
    std::vector<std::complex<double>> pairs;  // im > 0, sorted by (re, im)

    std::size_t degree() const { return reals.size() + 2 * pairs.size(); }

    /// Full multiset: reals plus both members of every pair.
    std::vector<std::complex<double>> multiset() const;
};

/// Eigenvalues of a real matrix, with |im| <= pair_tol * scale coerced to
/// real (scale = largest eigenvalue magnitude) and the rest matched into
/// conjugate pairs. Throws SpectralPairingError when matching fails.
Spectrum spectrum(const Eigen::MatrixXd& psi, double pair_tol = 1e-9);

/// Spectrum of the associated matrix of m.
Spectrum spectrum(const HyperNum& m, double pair_tol = 1e-9);

/// Exact eigenvalues of the circulant associated matrix of a cyclic-group
/// element: lambda_k = sum_{j=0..n-1} m_{j+1} * omega^{jk},
/// omega = exp(2*pi*i/n), k = 0..n-1. Serves as the independent oracle for
/// spectrum() on cyclic systems; lambda_0 is exactly the plain coefficient
/// sum.
std::vector<std::complex<double>> circulant_eigenvalues(const std::vector<double>& m);

/// Worst nearest-match distance between two complex multisets (greedy
/// pairing), or +infinity when the sizes differ. Used to compare a computed
/// spectrum against the circulant oracle.
double multiset_deviation(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b);

/// Direct-sum shape R^a (+) C^b inferred from generic spectra.
struct IsoSignature {
    std::size_t reals = 0;
    std::size_t pairs = 0;
    std::string label; // "R^2 ⊕ C", "R ⊕ C^2", "R^1", ...
};

/// Samples `trials` random elements (deterministic under seed), computes
/// each spectrum, and returns the maximal signature observed (most complex
/// pairs). Degenerate samples may only collapse pairs into reals; samples
/// that cannot be ordered that way raise a classification Error.
IsoSignature iso_signature(const HnsPtr& system, unsigned trials = 8,
                           std::uint64_t seed = 1, double pair_tol = 1e-9);

/// The fixed 4x4 symmetric quadratic-form matrix governing the sign of the
/// G51 pair discriminant, in the basis (m2, m3, m4, m5). Entries are built
/// from +-2*sqrt5 +- 10 and +-4*sqrt5; eigenvalues are {0, 0, 0, -40}.
Eigen::Matrix4d discriminant_form_g51();

/// Two printed transcriptions of the same discriminant, returned verbatim
/// for comparison. They are NOT scaled alike: the expanded quadratic equals
/// (m^T * KI * m)/4 + (9/4)*m3^2 identically (one digit dropped in print on
/// the m3^2 term), while the factored form matches the true discriminant
/// -(Im lambda_1)^2 exactly on the m3 = m4 = 0 subspace. The tests document
/// both relations against the circulant oracle.
struct DiscriminantB {
    double quadratic_value = 0.0;
    double factored_value = 0.0;
};

DiscriminantB discriminant_b(double m2, double m3, double m4, double m5);

} // namespace hcs
