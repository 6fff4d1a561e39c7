#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "hcs/hns.hpp"

namespace hcs {

/// Built-in systems: the cyclic algebras G47 and G51 plus the block systems
/// "R+R+C" (verbatim from its source, including the e2*e2 = e3 cell that
/// contradicts the name), "R+R+C_corrected" (e2*e2 = e2), "W+C" (hyperbolic
/// plus complex blocks), and "R+C+C".
std::vector<HnsPtr> builtin_systems();

/// An ordered, name-unique collection of system definitions with a versioned
/// JSON file format. Values are immutable after load; saves are whole-file
/// atomic (write temp, then rename).
class Catalog {
public:
    Catalog() = default;

    static Catalog builtins();

    /// Parses and fully re-validates a catalog file. Malformed JSON raises
    /// ValidationError with parser context; structural violations raise
    /// ValidationError naming the system and cell.
    static Catalog load(const std::filesystem::path& path);

    void save(const std::filesystem::path& path) const;

    /// Rejects duplicate names.
    void add(HnsPtr system);

    /// Exact, case-sensitive name lookup. Throws NotFoundError listing the
    /// available names.
    HnsPtr find(std::string_view name) const;

    bool contains(std::string_view name) const;
    const std::vector<HnsPtr>& systems() const { return systems_; }
    std::size_t size() const { return systems_.size(); }

    /// Structural equality of all systems, in order.
    friend bool operator==(const Catalog& a, const Catalog& b);

private:
    std::vector<HnsPtr> systems_;
};

} // namespace hcs
