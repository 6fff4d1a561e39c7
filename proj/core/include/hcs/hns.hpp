#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcs/errors.hpp"

namespace hcs {

/// One term of a structure-constant cell: the product contributes
/// `coeff * e_{basis}`. Indices are 0-based internally; the file format and
/// all rendered output use 1-based basis labels.
struct Term {
    std::size_t basis = 0;
    double coeff = 0.0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A cell holds the expansion of one basis product e_i * e_j. Target indices
/// within a cell are distinct; an empty cell means the product is zero.
using Cell = std::vector<Term>;

/// table[i][j] expands e_i * e_j.
using Table = std::vector<std::vector<Cell>>;

/// Immutable definition of a hypercomplex number system: a named basis
/// e_1..e_n plus the structure-constant table of all pairwise products.
class HnsDef {
public:
    /// Validates and freezes a definition. The unit index is detected by
    /// scanning the table for a basis element acting as a two-sided
    /// identity; when `claimed_unit` is given (0-based) it must agree with
    /// the scan or a ValidationError is thrown.
    static std::shared_ptr<const HnsDef> create(
        std::string name, std::size_t dim, Table table,
        std::optional<std::size_t> claimed_unit = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const Table& table() const { return table_; }
    const Cell& cell(std::size_t i, std::size_t j) const { return table_[i][j]; }

    /// Index of the basis element that is a two-sided unit, if any.
    std::optional<std::size_t> unit_index() const { return unit_index_; }

    /// True when cell(i,j) and cell(j,i) are structurally identical for all
    /// i, j. Enables the bit-exact symmetric accumulation in multiply().
    bool cells_symmetric() const { return cells_symmetric_; }

    /// Structural equality: same name, dimension, and table.
    friend bool operator==(const HnsDef& a, const HnsDef& b) {
        return a.name_ == b.name_ && a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    HnsDef() = default;

    std::string name_;
    std::size_t dim_ = 0;
    Table table_;
    std::optional<std::size_t> unit_index_;
    bool cells_symmetric_ = false;
};

using HnsPtr = std::shared_ptr<const HnsDef>;

/// Group algebra of the cyclic group Z_n over the reals:
/// e_i * e_j = e_{((i+j-2) mod n)+1} in 1-based labels. Named "G47" for
/// n = 4 and "G51" for n = 5 (their catalog names), "Z<n>" otherwise.
HnsPtr cyclic_group_algebra(std::size_t n);

/// True when the table is structurally the cyclic-group law above.
bool is_cyclic_table(const HnsDef& def);

/// An element of a fixed system: the coefficient vector over e_1..e_n.
class HyperNum {
public:
    HyperNum(HnsPtr system, std::vector<double> coeffs);

    static HyperNum zero(HnsPtr system);
    static HyperNum basis(HnsPtr system, std::size_t index); // 0-based

    const HnsPtr& system() const { return system_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    std::size_t dim() const { return coeffs_.size(); }
    double operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;

private:
    HnsPtr system_;
    std::vector<double> coeffs_;
};

/// Two-sided multiplicative identity. Prefers a basis element (the table
/// scan stored on HnsDef); otherwise solves the unit equations over general
/// elements. Throws NoUnitError when the algebra has no identity.
HyperNum unit_element(const HnsPtr& system);

HyperNum add(const HyperNum& a, const HyperNum& b);
HyperNum sub(const HyperNum& a, const HyperNum& b);
HyperNum scale(const HyperNum& a, double c);

/// Bilinear product through the structure constants:
/// c_k = sum_{i,j} a_i b_j coeff(i,j->k). For tables with symmetric cells
/// the two cross terms of each unordered pair {i,j} are folded into one
/// symmetric expression, so multiply(a,b) and multiply(b,a) accumulate
/// identical floating-point term sequences and agree bit-for-bit.
HyperNum multiply(const HyperNum& a, const HyperNum& b);

/// a^k by left-fold: a^0 = unit, a^k = multiply(power(a, k-1), a).
HyperNum power(const HyperNum& a, unsigned k);

inline HyperNum operator+(const HyperNum& a, const HyperNum& b) { return add(a, b); }
inline HyperNum operator-(const HyperNum& a, const HyperNum& b) { return sub(a, b); }
inline HyperNum operator*(const HyperNum& a, const HyperNum& b) { return multiply(a, b); }
inline HyperNum operator*(double c, const HyperNum& a) { return scale(a, c); }
inline HyperNum operator*(const HyperNum& a, double c) { return scale(a, c); }

/// Max-magnitude coefficient.
double inf_norm(const HyperNum& a);

struct AlgebraProperties {
    bool commutative = false;
    bool associative = false;
    bool has_unit = false;
};

/// Exhaustive basis-pair/triple check of commutativity and associativity
/// within tol, plus unit detection. Report-only: never throws.
AlgebraProperties check_properties(const HnsPtr& system, double tol = 1e-12);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

/// Renders "a1*e1 + a2*e2 + ..." skipping zero terms; a zero number renders
/// "0"; unit coefficients print as the bare basis symbol.
std::string natural_form(const HyperNum& a, std::string_view basis_symbol = "e");

/// Fully symbolic rendering "a1*e1 + a2*e2 + ... + a<n>*e<n>" for a generic
/// element of an n-dimensional system.
std::string symbolic_natural_form(std::size_t dim,
                                  std::string_view coeff_symbol = "a",
                                  std::string_view basis_symbol = "e");

} // namespace hcs
