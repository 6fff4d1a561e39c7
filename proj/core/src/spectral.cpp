#include "hcs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace hcs {

Eigen::MatrixXd assoc_matrix(const HyperNum& m) {
    const HnsDef& def = *m.system();
    const auto n = static_cast<Eigen::Index>(def.dim());
    Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < def.dim(); ++i) {
        const double mi = m[i];
        for (std::size_t j = 0; j < def.dim(); ++j)
            for (const Term& t : def.cell(i, j))
                psi(static_cast<Eigen::Index>(t.basis), static_cast<Eigen::Index>(j)) +=
                    mi * t.coeff;
    }
    return psi;
}

std::vector<std::complex<double>> Spectrum::multiset() const {
    std::vector<std::complex<double>> all;
    all.reserve(degree());
    for (double r : reals) all.emplace_back(r, 0.0);
    for (const auto& p : pairs) {
        all.push_back(p);
        all.push_back(std::conj(p));
    }
    return all;
}

Spectrum spectrum(const Eigen::MatrixXd& psi, double pair_tol) {
    if (psi.rows() != psi.cols())
        throw ValidationError("spectrum: matrix must be square");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(psi, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error("spectrum: eigenvalue iteration failed to converge");

    const Eigen::VectorXcd values = solver.eigenvalues();
    double scale = 0.0;
    for (Eigen::Index k = 0; k < values.size(); ++k)
        scale = std::max(scale, std::abs(values[k]));
    const double coerce = pair_tol * (scale > 0.0 ? scale : 1.0);

    Spectrum spect;
    std::vector<std::complex<double>> pos, neg;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        const std::complex<double> z = values[k];
        if (std::abs(z.imag()) <= coerce)
            spect.reals.push_back(z.real());
        else if (z.imag() > 0.0)
            pos.push_back(z);
        else
            neg.push_back(z);
    }
    if (pos.size() != neg.size())
        throw SpectralPairingError(
            "spectrum: non-real eigenvalues do not split into conjugate pairs (" +
            std::to_string(pos.size()) + " above vs " + std::to_string(neg.size()) +
            " below the real axis)");

    auto ordering = [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return std::abs(a.imag()) < std::abs(b.imag());
    };
    std::sort(pos.begin(), pos.end(), ordering);
    std::sort(neg.begin(), neg.end(), ordering);
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (std::abs(pos[k] - std::conj(neg[k])) > coerce)
            throw SpectralPairingError("spectrum: eigenvalue " +
                                       std::to_string(pos[k].real()) + "+" +
                                       std::to_string(pos[k].imag()) +
                                       "i has no conjugate partner within tolerance");
        spect.pairs.push_back(pos[k]);
    }

    std::sort(spect.reals.begin(), spect.reals.end());
    std::sort(spect.pairs.begin(), spect.pairs.end(), ordering);
    return spect;
}

Spectrum spectrum(const HyperNum& m, double pair_tol) {
    return spectrum(assoc_matrix(m), pair_tol);
}

std::vector<std::complex<double>> circulant_eigenvalues(const std::vector<double>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw ValidationError("circulant eigenvalues: empty coefficient vector");

    // Roots of unity indexed modulo n keep every trig argument in [0, 2pi);
    // omega^0 is exactly (1, 0), so lambda_0 is the plain coefficient sum.
    std::vector<std::complex<double>> omega(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(n);
        omega[r] = {std::cos(theta), std::sin(theta)};
    }

    std::vector<std::complex<double>> lambda(n);
    for (std::size_t k = 0; k < n; ++k) {
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::complex<double>& w = omega[(j * k) % n];
            re += m[j] * w.real();
            im += m[j] * w.imag();
        }
        lambda[k] = {re, im};
    }
    return lambda;
}

double multiset_deviation(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const auto& x : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t pick = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        used[pick] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

IsoSignature iso_signature(const HnsPtr& system, unsigned trials, std::uint64_t seed,
                           double pair_tol) {
    if (trials == 0) throw ValidationError("iso_signature: trials must be at least 1");
    const std::size_t n = system->dim();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    bool have = false;
    std::size_t best_reals = 0, best_pairs = 0;
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<double> coeffs(n);
        for (double& c : coeffs) c = dist(rng);
        Spectrum spect = spectrum(HyperNum(system, std::move(coeffs)), pair_tol);
        const std::size_t r = spect.reals.size(), p = spect.pairs.size();
        if (r + 2 * p != n)
            throw Error("iso_signature: sample signature R^" + std::to_string(r) +
                        " C^" + std::to_string(p) + " does not span dimension " +
                        std::to_string(n));
        if (!have || p > best_pairs) {
            best_reals = r;
            best_pairs = p;
            have = true;
        }
        // With r + 2p = n, two signatures are comparable exactly when their
        // pair counts are; a degenerate sample only collapses pairs into
        // reals, so the maximal-pairs signature refines every other one.
    }

    IsoSignature sig;
    sig.reals = best_reals;
    sig.pairs = best_pairs;
    std::string label;
    if (sig.reals > 0 && sig.pairs > 0) {
        label = sig.reals == 1 ? "R" : "R^" + std::to_string(sig.reals);
        label += " ⊕ ";
        label += sig.pairs == 1 ? "C" : "C^" + std::to_string(sig.pairs);
    } else if (sig.reals > 0) {
        label = "R^" + std::to_string(sig.reals);
    } else {
        label = "C^" + std::to_string(sig.pairs);
    }
    sig.label = std::move(label);
    return sig;
}

Eigen::Matrix4d discriminant_form_g51() {
    const double s = std::sqrt(5.0);
    Eigen::Matrix4d ki;
    ki << -2 * s - 10, -4 * s,       4 * s,        2 * s + 10,
          -4 * s,       2 * s - 10, -2 * s + 10,   4 * s,
           4 * s,      -2 * s + 10,  2 * s - 10,  -4 * s,
           2 * s + 10,  4 * s,      -4 * s,       -2 * s - 10;
    return ki;
}

DiscriminantB discriminant_b(double m2, double m3, double m4, double m5) {
    const double s = std::sqrt(5.0);
    DiscriminantB b;
    // Verbatim transcription of the expanded quadratic, term order as
    // printed, including the lone "-m3*m3" (its source dropped a digit; the
    // form matrix pins that coefficient at -10) and the overall /4.
    b.quadratic_value =
        (-2 * s * m2 * m2 - 10 * m2 * m2 + 4 * s * m5 * m2 + 20 * m5 * m2 -
         8 * s * m3 * m2 + 8 * s * m4 * m2 - 10 * m5 * m5 + 2 * s * m4 * m4 +
         2 * s * m3 * m3 - 8 * s * m4 * m5 - 10 * m4 * m4 - 2 * s * m5 * m5 -
         m3 * m3 + 20 * m3 * m4 + 8 * s * m3 * m5 - 4 * s * m3 * m4) / 4.0;
    const double u = -2 * m5 + 2 * m2 - s * m3 - s * m4 - m3 + m4;
    b.factored_value = -((2 * s + 10) / 64.0) * u * u;
    return b;
}

} // namespace hcs
