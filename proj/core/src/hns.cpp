#include "hcs/hns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

namespace hcs {

namespace {

// Product vector of e_i * e_j straight from the table.
std::vector<double> cell_vector(const HnsDef& def, std::size_t i, std::size_t j) {
    std::vector<double> v(def.dim(), 0.0);
    for (const Term& t : def.cell(i, j)) v[t.basis] += t.coeff;
    return v;
}

bool is_unit_candidate(const HnsDef& def, std::size_t u) {
    const std::size_t n = def.dim();
    for (std::size_t j = 0; j < n; ++j) {
        auto left = cell_vector(def, u, j);
        auto right = cell_vector(def, j, u);
        for (std::size_t k = 0; k < n; ++k) {
            const double expect = (k == j) ? 1.0 : 0.0;
            if (left[k] != expect || right[k] != expect) return false;
        }
    }
    return true;
}

} // namespace

std::shared_ptr<const HnsDef> HnsDef::create(std::string name, std::size_t dim,
                                             Table table,
                                             std::optional<std::size_t> claimed_unit) {
    if (dim == 0)
        throw ValidationError("system \"" + name + "\": dimension must be at least 1");
    if (table.size() != dim)
        throw ValidationError("system \"" + name + "\": table has " +
                              std::to_string(table.size()) + " rows, expected " +
                              std::to_string(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        if (table[i].size() != dim)
            throw ValidationError("system \"" + name + "\": row " + std::to_string(i + 1) +
                                  " has " + std::to_string(table[i].size()) +
                                  " cells, expected " + std::to_string(dim));
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<bool> seen(dim, false);
            for (const Term& t : table[i][j]) {
                if (t.basis >= dim)
                    throw ValidationError("system \"" + name + "\" cell (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "): target index " + std::to_string(t.basis + 1) +
                                          " out of range 1.." + std::to_string(dim));
                if (seen[t.basis])
                    throw ValidationError("system \"" + name + "\" cell (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "): duplicate target index " +
                                          std::to_string(t.basis + 1));
                seen[t.basis] = true;
                if (!std::isfinite(t.coeff))
                    throw ValidationError("system \"" + name + "\" cell (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "): non-finite coefficient");
            }
        }
    }

    auto def = std::shared_ptr<HnsDef>(new HnsDef());
    def->name_ = std::move(name);
    def->dim_ = dim;
    def->table_ = std::move(table);

    for (std::size_t u = 0; u < dim; ++u) {
        if (is_unit_candidate(*def, u)) {
            def->unit_index_ = u;
            break;
        }
    }
    if (claimed_unit && def->unit_index_ != claimed_unit) {
        std::string found = def->unit_index_
                                ? std::to_string(*def->unit_index_ + 1)
                                : std::string("none");
        throw ValidationError("system \"" + def->name_ + "\": stored unit index " +
                              std::to_string(*claimed_unit + 1) +
                              " disagrees with the table scan (found " + found + ")");
    }

    def->cells_symmetric_ = true;
    for (std::size_t i = 0; i < dim && def->cells_symmetric_; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (def->table_[i][j] != def->table_[j][i]) {
                def->cells_symmetric_ = false;
                break;
            }

    return def;
}

HnsPtr cyclic_group_algebra(std::size_t n) {
    if (n == 0) throw ValidationError("cyclic group algebra: dimension must be at least 1");
    std::string name;
    if (n == 4)
        name = "G47";
    else if (n == 5)
        name = "G51";
    else
        name = "Z" + std::to_string(n);

    Table table(n, std::vector<Cell>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i][j] = Cell{Term{(i + j) % n, 1.0}};
    return HnsDef::create(std::move(name), n, std::move(table));
}

bool is_cyclic_table(const HnsDef& def) {
    const std::size_t n = def.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Cell& c = def.cell(i, j);
            if (c.size() != 1 || c[0].basis != (i + j) % n || c[0].coeff != 1.0)
                return false;
        }
    return true;
}

HyperNum::HyperNum(HnsPtr system, std::vector<double> coeffs)
    : system_(std::move(system)), coeffs_(std::move(coeffs)) {
    if (!system_) throw ValidationError("number requires a system definition");
    if (coeffs_.size() != system_->dim())
        throw ValidationError("system \"" + system_->name() + "\": expected " +
                              std::to_string(system_->dim()) + " coefficients, got " +
                              std::to_string(coeffs_.size()));
}

HyperNum HyperNum::zero(HnsPtr system) {
    std::size_t n = system->dim();
    return HyperNum(std::move(system), std::vector<double>(n, 0.0));
}

HyperNum HyperNum::basis(HnsPtr system, std::size_t index) {
    std::size_t n = system->dim();
    if (index >= n)
        throw ValidationError("basis index " + std::to_string(index + 1) +
                              " out of range 1.." + std::to_string(n));
    std::vector<double> c(n, 0.0);
    c[index] = 1.0;
    return HyperNum(std::move(system), std::move(c));
}

bool HyperNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](double v) { return v == 0.0; });
}

HyperNum unit_element(const HnsPtr& system) {
    if (auto u = system->unit_index()) return HyperNum::basis(system, *u);

    // No basis element acts as the identity; look for a general one by
    // solving u*e_j = e_j and e_j*u = e_j in least squares. The stacked
    // system has 2n^2 equations in n unknowns.
    const std::size_t n = system->dim();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n * n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            for (const Term& t : system->cell(i, j))
                a(j * n + t.basis, i) += t.coeff; // (u e_j)_k
            for (const Term& t : system->cell(j, i))
                a(n * n + j * n + t.basis, i) += t.coeff; // (e_j u)_k
        }
    for (std::size_t j = 0; j < n; ++j) {
        rhs(j * n + j) = 1.0;
        rhs(n * n + j * n + j) = 1.0;
    }

    Eigen::VectorXd u = a.colPivHouseholderQr().solve(rhs);
    const double residual = (a * u - rhs).lpNorm<Eigen::Infinity>();
    if (!(residual <= 1e-10))
        throw NoUnitError("system \"" + system->name() + "\" has no unit element");
    return HyperNum(system, std::vector<double>(u.data(), u.data() + n));
}

namespace {

void require_same_system(const HyperNum& a, const HyperNum& b) {
    if (a.system() == b.system()) return;
    if (*a.system() == *b.system()) return;
    throw SystemMismatchError("operands belong to different systems (\"" +
                              a.system()->name() + "\" vs \"" + b.system()->name() +
                              "\")");
}

} // namespace

HyperNum add(const HyperNum& a, const HyperNum& b) {
    require_same_system(a, b);
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return HyperNum(a.system(), std::move(out));
}

HyperNum sub(const HyperNum& a, const HyperNum& b) {
    require_same_system(a, b);
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return HyperNum(a.system(), std::move(out));
}

HyperNum scale(const HyperNum& a, double c) {
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * a[i];
    return HyperNum(a.system(), std::move(out));
}

HyperNum multiply(const HyperNum& a, const HyperNum& b) {
    require_same_system(a, b);
    const HnsDef& def = *a.system();
    const std::size_t n = def.dim();
    std::vector<double> out(n, 0.0);

    // Diagonal terms first, then unordered pairs {i, j}. a_i*b_j + a_j*b_i
    // is invariant under swapping a and b, so for symmetric cells the whole
    // accumulation sequence is too.
    for (std::size_t i = 0; i < n; ++i) {
        const double p = a[i] * b[i];
        for (const Term& t : def.cell(i, i)) out[t.basis] += p * t.coeff;
    }
    const bool folded = def.cells_symmetric();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (folded) {
                const double s = a[i] * b[j] + a[j] * b[i];
                for (const Term& t : def.cell(i, j)) out[t.basis] += s * t.coeff;
            } else {
                const double pij = a[i] * b[j];
                for (const Term& t : def.cell(i, j)) out[t.basis] += pij * t.coeff;
                const double pji = a[j] * b[i];
                for (const Term& t : def.cell(j, i)) out[t.basis] += pji * t.coeff;
            }
        }
    return HyperNum(a.system(), std::move(out));
}

HyperNum power(const HyperNum& a, unsigned k) {
    if (k == 0) return unit_element(a.system());
    HyperNum acc = a;
    for (unsigned s = 1; s < k; ++s) acc = multiply(acc, a);
    return acc;
}

double inf_norm(const HyperNum& a) {
    double m = 0.0;
    for (double v : a.coeffs()) m = std::max(m, std::abs(v));
    return m;
}

AlgebraProperties check_properties(const HnsPtr& system, double tol) {
    const std::size_t n = system->dim();
    AlgebraProperties props;
    props.has_unit = system->unit_index().has_value();
    if (!props.has_unit) {
        try {
            unit_element(system);
            props.has_unit = true;
        } catch (const NoUnitError&) {
        }
    }

    auto close = [&](const HyperNum& x, const HyperNum& y) {
        return inf_norm(sub(x, y)) <= tol;
    };

    props.commutative = true;
    for (std::size_t i = 0; i < n && props.commutative; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto ei = HyperNum::basis(system, i);
            auto ej = HyperNum::basis(system, j);
            if (!close(multiply(ei, ej), multiply(ej, ei))) {
                props.commutative = false;
                break;
            }
        }

    props.associative = true;
    for (std::size_t i = 0; i < n && props.associative; ++i)
        for (std::size_t j = 0; j < n && props.associative; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto ei = HyperNum::basis(system, i);
                auto ej = HyperNum::basis(system, j);
                auto ek = HyperNum::basis(system, k);
                if (!close(multiply(multiply(ei, ej), ek),
                           multiply(ei, multiply(ej, ek)))) {
                    props.associative = false;
                    break;
                }
            }
    return props;
}

std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string natural_form(const HyperNum& a, std::string_view basis_symbol) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double c = a[i];
        if (c == 0.0) continue;
        const double mag = std::abs(c);
        if (first) {
            if (c < 0.0) out << '-';
            first = false;
        } else {
            out << (c < 0.0 ? " - " : " + ");
        }
        if (mag != 1.0) out << format_double(mag) << '*';
        out << basis_symbol << (i + 1);
    }
    if (first) return "0";
    return out.str();
}

std::string symbolic_natural_form(std::size_t dim, std::string_view coeff_symbol,
                                  std::string_view basis_symbol) {
    std::ostringstream out;
    for (std::size_t i = 1; i <= dim; ++i) {
        if (i > 1) out << " + ";
        out << coeff_symbol << i << '*' << basis_symbol << i;
    }
    return out.str();
}

} // namespace hcs
