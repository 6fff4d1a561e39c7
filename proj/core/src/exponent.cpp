#include "hcs/exponent.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "hcs/spectral.hpp"

namespace hcs {

SeriesResult exp_series(const HyperNum& m, double tol, unsigned max_terms) {
    if (!(tol > 0.0)) throw ValidationError("exp_series: tol must be positive");
    if (max_terms == 0) throw ValidationError("exp_series: max_terms must be at least 1");

    HyperNum term = unit_element(m.system());
    HyperNum sum = term;
    for (unsigned s = 1; s <= max_terms; ++s) {
        term = scale(multiply(term, m), 1.0 / static_cast<double>(s));
        sum = add(sum, term);
        if (inf_norm(term) <= tol) return SeriesResult{sum, s};
    }
    throw ConvergenceError("exp_series: no term below tolerance " + format_double(tol) +
                           " within " + std::to_string(max_terms) + " terms");
}

namespace {

// Scaling-and-squaring with the degree-13 Pade approximant. The single
// fixed degree is accurate to machine precision once the scaled norm is
// below theta13, which the scaling step guarantees.
Eigen::MatrixXd expm_pade13(Eigen::MatrixXd a) {
    static constexpr double theta13 = 5.371920351148152;
    static constexpr double b[] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};

    const Eigen::Index n = a.rows();
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
        a *= std::ldexp(1.0, -squarings); // exact power-of-two scaling
    }

    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd a4 = a2 * a2;
    const Eigen::MatrixXd a6 = a4 * a2;
    const Eigen::MatrixXd u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
             b[3] * a2 + b[1] * identity);
    const Eigen::MatrixXd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                              b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * identity;

    Eigen::MatrixXd f = (v - u).partialPivLu().solve(v + u);
    for (int s = 0; s < squarings; ++s) f = f * f;
    return f;
}

Eigen::VectorXd unit_vector(const HyperNum& m) {
    const HyperNum eps = unit_element(m.system());
    return Eigen::Map<const Eigen::VectorXd>(eps.coeffs().data(),
                                             static_cast<Eigen::Index>(eps.dim()));
}

void require_cyclic(const HyperNum& m, std::size_t n, const char* op) {
    if (m.system()->dim() != n || !is_cyclic_table(*m.system()))
        throw SystemMismatchError(std::string(op) + ": system \"" +
                                  m.system()->name() + "\" is not the " +
                                  std::to_string(n) + "-dimensional cyclic algebra");
}

} // namespace

HyperNum exp_matrix(const HyperNum& m) {
    // The LU solve inside the Pade core multiplies by a rounded pivot
    // reciprocal, which costs half an ulp even on the zero matrix. Exp(0)
    // must be the unit exactly.
    if (m.is_zero()) return unit_element(m.system());
    const Eigen::VectorXd x = expm_pade13(assoc_matrix(m)) * unit_vector(m);
    return HyperNum(m.system(), std::vector<double>(x.data(), x.data() + x.size()));
}

HyperNum exp_eigen(const HyperNum& m, double rcond_tol) {
    const Eigen::VectorXd eps = unit_vector(m);
    const Eigen::MatrixXd psi = assoc_matrix(m);
    const Eigen::Index n = psi.rows();

    Eigen::EigenSolver<Eigen::MatrixXd> solver(psi);
    if (solver.info() != Eigen::Success)
        throw Error("exp_eigen: eigenvalue iteration failed to converge");
    const Eigen::VectorXcd values = solver.eigenvalues();
    const Eigen::MatrixXcd vectors = solver.eigenvectors();

    double scale_mag = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
        scale_mag = std::max(scale_mag, std::abs(values[k]));
    const double coerce = 1e-9 * (scale_mag > 0.0 ? scale_mag : 1.0);

    // Columns of the fundamental system at t = 0 and t = 1. Real mode:
    // v e^{lambda t}. Pair mode (alpha +- i beta, v = p + i q):
    // e^{alpha t}(p cos beta t - q sin beta t) and
    // e^{alpha t}(p sin beta t + q cos beta t); at t = 0 these are p and q.
    Eigen::MatrixXd phi0(n, n), phi1(n, n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    Eigen::Index col = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        const std::complex<double> lam = values[k];
        if (std::abs(lam.imag()) <= coerce) {
            used[static_cast<std::size_t>(k)] = true;
            // Rotate the eigenvector onto the real axis before dropping the
            // imaginary part; solvers are free to return it with any phase.
            Eigen::VectorXcd v = vectors.col(k);
            Eigen::Index imax = 0;
            v.cwiseAbs().maxCoeff(&imax);
            const std::complex<double> pivot = v[imax];
            if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
            phi0.col(col) = v.real();
            phi1.col(col) = v.real() * std::exp(lam.real());
            ++col;
            continue;
        }
        // Find the conjugate partner among the unused eigenvalues.
        Eigen::Index partner = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == k || used[static_cast<std::size_t>(j)]) continue;
            const double d = std::abs(values[j] - std::conj(lam));
            if (d < best) {
                best = d;
                partner = j;
            }
        }
        if (partner < 0 || best > coerce * 1e3)
            throw SpectralPairingError("exp_eigen: eigenvalue " +
                                       format_double(lam.real()) + "+" +
                                       format_double(lam.imag()) +
                                       "i has no conjugate partner");
        used[static_cast<std::size_t>(k)] = true;
        used[static_cast<std::size_t>(partner)] = true;

        const Eigen::Index rep = lam.imag() > 0.0 ? k : partner;
        const double alpha = values[rep].real();
        const double beta = values[rep].imag();
        const Eigen::VectorXd p = vectors.col(rep).real();
        const Eigen::VectorXd q = vectors.col(rep).imag();
        const double ea = std::exp(alpha), cb = std::cos(beta), sb = std::sin(beta);
        phi0.col(col) = p;
        phi1.col(col) = ea * (p * cb - q * sb);
        ++col;
        phi0.col(col) = q;
        phi1.col(col) = ea * (p * sb + q * cb);
        ++col;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(phi0,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0.0) || sv(n - 1) <= rcond_tol * sv(0))
        throw DegenerateSpectrumError(
            "exp_eigen: mode matrix is numerically singular (defective or "
            "near-defective spectrum); use the matrix exponential route");

    const Eigen::VectorXd weights = svd.solve(eps);
    const Eigen::VectorXd x = phi1 * weights;
    return HyperNum(m.system(), std::vector<double>(x.data(), x.data() + x.size()));
}

HyperNum exp_closed_g47(const HyperNum& m) {
    require_cyclic(m, 4, "exp_closed_g47");
    const auto& c = m.coeffs();
    const double alpha1 = c[0] + c[2], alpha2 = c[0] - c[2];
    const double beta1 = c[1] + c[3], beta2 = c[1] - c[3];
    const double e1 = std::exp(alpha1), e2 = std::exp(alpha2);
    const double ch = std::cosh(beta1), sh = std::sinh(beta1);
    const double co = std::cos(beta2), si = std::sin(beta2);
    return HyperNum(m.system(), {0.5 * (e1 * ch + e2 * co), 0.5 * (e1 * sh + e2 * si),
                                 0.5 * (e1 * ch - e2 * co), 0.5 * (e1 * sh - e2 * si)});
}

const G51Constants& g51_constants() {
    static const G51Constants table = [] {
        G51Constants k;
        for (std::size_t i = 0; i < 5; ++i) {
            const double t1 = 2.0 * std::numbers::pi * static_cast<double>(i) / 5.0;
            const double t2 = 4.0 * std::numbers::pi * static_cast<double>(i) / 5.0;
            k.C1[i] = 1.0 / 5.0;
            k.C2[i] = (2.0 / 5.0) * std::cos(t1);
            k.F2[i] = (2.0 / 5.0) * std::sin(t1);
            k.C3[i] = (2.0 / 5.0) * std::cos(t2);
            k.F3[i] = (2.0 / 5.0) * std::sin(t2);
        }
        return k;
    }();
    return table;
}

HyperNum exp_closed_g51(const HyperNum& m) {
    require_cyclic(m, 5, "exp_closed_g51");
    if (m.is_zero()) return unit_element(m.system()); // Exp(0) = unit, exactly

    const auto& c = m.coeffs();
    const double lambda1 = c[0] + c[1] + c[2] + c[3] + c[4];
    const auto lambda = circulant_eigenvalues(c);
    const std::complex<double> z1 = lambda[1], z2 = lambda[2];
    const G51Constants& k = g51_constants();

    const double er = (1.0 / 5.0) * std::exp(lambda1);
    const double e2 = std::exp(z1.real()), c2 = std::cos(z1.imag()),
                 s2 = std::sin(z1.imag());
    const double e3 = std::exp(z2.real()), c3 = std::cos(z2.imag()),
                 s3 = std::sin(z2.imag());

    std::vector<double> out(5);
    for (std::size_t i = 0; i < 5; ++i)
        out[i] = er + e2 * (k.C2[i] * c2 + k.F2[i] * s2) +
                 e3 * (k.C3[i] * c3 + k.F3[i] * s3);
    return HyperNum(m.system(), std::move(out));
}

HyperNum exp_cyclic_dft(const HyperNum& m, double imag_tol) {
    const std::size_t n = m.system()->dim();
    if (!is_cyclic_table(*m.system()))
        throw SystemMismatchError("exp_cyclic_dft: system \"" + m.system()->name() +
                                  "\" is not a cyclic group algebra");
    if (m.is_zero()) return unit_element(m.system()); // Exp(0) = unit, exactly

    const auto lambda = circulant_eigenvalues(m.coeffs());
    std::vector<std::complex<double>> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = std::exp(lambda[k]);

    std::vector<std::complex<double>> omega(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(n);
        omega[r] = {std::cos(theta), std::sin(theta)};
    }

    std::vector<std::complex<double>> coeff(n);
    double max_mag = 0.0, max_imag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            acc += w[k] * omega[(n - (j * k) % n) % n]; // omega^{-jk}
        acc /= static_cast<double>(n);
        coeff[j] = acc;
        max_mag = std::max(max_mag, std::abs(acc));
        max_imag = std::max(max_imag, std::abs(acc.imag()));
    }
    if (max_imag > imag_tol * std::max(max_mag, 1.0))
        throw InternalConsistencyError(
            "exp_cyclic_dft: imaginary residue " + format_double(max_imag) +
            " exceeds " + format_double(imag_tol) + " of the coefficient scale");

    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = coeff[j].real();
    return HyperNum(m.system(), std::move(out));
}

ExpReport crosscheck_exp(const HyperNum& m, double series_tol) {
    ExpReport report{.input = m};

    auto attempt = [&](const std::string& name, auto&& fn) {
        try {
            report.results.emplace(name, fn());
        } catch (const std::exception& e) {
            report.errors.emplace(name, e.what());
        }
    };

    attempt("series", [&] {
        SeriesResult r = exp_series(m, series_tol);
        report.terms_used = r.terms_used;
        return r.value;
    });
    attempt("matrix", [&] { return exp_matrix(m); });
    attempt("eigen", [&] { return exp_eigen(m); });
    if (is_cyclic_table(*m.system())) {
        const std::size_t n = m.system()->dim();
        if (n == 4) attempt("closed_g47", [&] { return exp_closed_g47(m); });
        if (n == 5) attempt("closed_g51", [&] { return exp_closed_g51(m); });
        attempt("dft", [&] { return exp_cyclic_dft(m); });
    }

    for (auto it = report.results.begin(); it != report.results.end(); ++it)
        for (auto jt = std::next(it); jt != report.results.end(); ++jt)
            report.max_pairwise_deviation =
                std::max(report.max_pairwise_deviation,
                         inf_norm(sub(it->second, jt->second)));
    return report;
}

} // namespace hcs
