#include "hcs/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

namespace hcs {

namespace {

using nlohmann::json;

// Cell helper for the block-system tables: {i -> 1.0} in 1-based labels.
Cell one(std::size_t target_1based) { return Cell{Term{target_1based - 1, 1.0}}; }

HnsPtr make_block_system(std::string name, std::size_t dim,
                         std::initializer_list<std::tuple<std::size_t, std::size_t, Cell>> cells) {
    Table table(dim, std::vector<Cell>(dim));
    for (const auto& [i, j, cell] : cells) table[i - 1][j - 1] = cell;
    return HnsDef::create(std::move(name), dim, std::move(table));
}

json system_to_json(const HnsDef& def) {
    json table = json::array();
    for (std::size_t i = 0; i < def.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < def.dim(); ++j) {
            json cell = json::array();
            for (const Term& t : def.cell(i, j))
                cell.push_back(json::array({t.basis + 1, t.coeff}));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    return json{{"name", def.name()}, {"dim", def.dim()}, {"table", std::move(table)}};
}

HnsPtr system_from_json(const json& entry, std::size_t position) {
    const std::string where = "systems[" + std::to_string(position) + "]";
    if (!entry.is_object())
        throw ValidationError(where + ": expected an object");
    if (!entry.contains("name") || !entry["name"].is_string())
        throw ValidationError(where + ": missing string field \"name\"");
    const std::string name = entry["name"].get<std::string>();
    if (!entry.contains("dim") || !entry["dim"].is_number_unsigned())
        throw ValidationError("system \"" + name +
                              "\": missing non-negative integer field \"dim\"");
    const auto dim = entry["dim"].get<std::size_t>();
    if (!entry.contains("table") || !entry["table"].is_array())
        throw ValidationError("system \"" + name + "\": missing array field \"table\"");

    const json& jt = entry["table"];
    if (jt.size() != dim)
        throw ValidationError("system \"" + name + "\": table has " +
                              std::to_string(jt.size()) + " rows, expected " +
                              std::to_string(dim));
    Table table(dim, std::vector<Cell>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        if (!jt[i].is_array() || jt[i].size() != dim)
            throw ValidationError("system \"" + name + "\" row " + std::to_string(i + 1) +
                                  ": expected " + std::to_string(dim) + " cells");
        for (std::size_t j = 0; j < dim; ++j) {
            const json& jc = jt[i][j];
            const std::string cell_id = "system \"" + name + "\" cell (" +
                                        std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")";
            if (!jc.is_array()) throw ValidationError(cell_id + ": expected an array");
            Cell cell;
            for (const json& jterm : jc) {
                if (!jterm.is_array() || jterm.size() != 2 ||
                    !jterm[0].is_number_integer() || !jterm[1].is_number())
                    throw ValidationError(cell_id +
                                          ": each term must be an [index, coefficient] pair");
                const auto index = jterm[0].get<long long>();
                if (index < 1 || static_cast<std::size_t>(index) > dim)
                    throw ValidationError(cell_id + ": target index " +
                                          std::to_string(index) + " out of range 1.." +
                                          std::to_string(dim));
                cell.push_back(Term{static_cast<std::size_t>(index - 1),
                                    jterm[1].get<double>()});
            }
            table[i][j] = std::move(cell);
        }
    }

    std::optional<std::size_t> claimed;
    if (entry.contains("unit")) {
        if (!entry["unit"].is_number_unsigned())
            throw ValidationError("system \"" + name +
                                  "\": field \"unit\" must be a 1-based index");
        const auto u = entry["unit"].get<std::size_t>();
        if (u < 1 || u > dim)
            throw ValidationError("system \"" + name + "\": unit index " +
                                  std::to_string(u) + " out of range 1.." +
                                  std::to_string(dim));
        claimed = u - 1;
    }
    return HnsDef::create(name, dim, std::move(table), claimed);
}

} // namespace

std::vector<HnsPtr> builtin_systems() {
    std::vector<HnsPtr> systems;
    systems.push_back(cyclic_group_algebra(4)); // G47
    systems.push_back(cyclic_group_algebra(5)); // G51

    // Verbatim table: the second summand squares into the complex block's
    // unit (e2*e2 = e3), which leaves the system without any unit element.
    systems.push_back(make_block_system("R+R+C", 4,
                                        {{1, 1, one(1)},
                                         {2, 2, one(3)},
                                         {3, 3, one(3)},
                                         {3, 4, one(4)},
                                         {4, 3, one(4)},
                                         {4, 4, Cell{Term{2, -1.0}}}}));
    // The name suggests an idempotent second real summand; this variant
    // realizes it.
    systems.push_back(make_block_system("R+R+C_corrected", 4,
                                        {{1, 1, one(1)},
                                         {2, 2, one(2)},
                                         {3, 3, one(3)},
                                         {3, 4, one(4)},
                                         {4, 3, one(4)},
                                         {4, 4, Cell{Term{2, -1.0}}}}));
    // Hyperbolic block {e1, e2} with e2*e2 = e1, complex block {e3, e4}.
    systems.push_back(make_block_system("W+C", 4,
                                        {{1, 1, one(1)},
                                         {1, 2, one(2)},
                                         {2, 1, one(2)},
                                         {2, 2, one(1)},
                                         {3, 3, one(3)},
                                         {3, 4, one(4)},
                                         {4, 3, one(4)},
                                         {4, 4, Cell{Term{2, -1.0}}}}));
    // One real summand plus two complex blocks {e2, e3} and {e4, e5}.
    systems.push_back(make_block_system("R+C+C", 5,
                                        {{1, 1, one(1)},
                                         {2, 2, one(2)},
                                         {2, 3, one(3)},
                                         {3, 2, one(3)},
                                         {3, 3, Cell{Term{1, -1.0}}},
                                         {4, 4, one(4)},
                                         {4, 5, one(5)},
                                         {5, 4, one(5)},
                                         {5, 5, Cell{Term{3, -1.0}}}}));
    return systems;
}

Catalog Catalog::builtins() {
    Catalog cat;
    for (auto& s : builtin_systems()) cat.add(std::move(s));
    return cat;
}

Catalog Catalog::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("catalog " + path.string() + ": cannot open for reading");

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("catalog " + path.string() + ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer())
        throw ValidationError("catalog " + path.string() +
                              ": top level must be {\"version\": 1, \"systems\": [...]}");
    if (doc["version"].get<long long>() != 1)
        throw ValidationError("catalog " + path.string() + ": unsupported version " +
                              doc["version"].dump());
    if (!doc.contains("systems") || !doc["systems"].is_array())
        throw ValidationError("catalog " + path.string() +
                              ": missing array field \"systems\"");

    Catalog cat;
    std::size_t position = 0;
    for (const json& entry : doc["systems"]) {
        cat.add(system_from_json(entry, position));
        ++position;
    }
    return cat;
}

void Catalog::save(const std::filesystem::path& path) const {
    json doc;
    doc["version"] = 1;
    json systems = json::array();
    for (const auto& s : systems_) systems.push_back(system_to_json(*s));
    doc["systems"] = std::move(systems);

    // Whole-file atomicity: readers see either the old catalog or the new
    // one, never a partial write.
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw ValidationError("catalog " + tmp.string() + ": cannot open for writing");
        out << doc.dump(2) << '\n';
        if (!out)
            throw ValidationError("catalog " + tmp.string() + ": write failed");
    }
    std::filesystem::rename(tmp, path);
}

void Catalog::add(HnsPtr system) {
    if (!system) throw ValidationError("catalog: cannot add a null system");
    if (contains(system->name()))
        throw ValidationError("catalog: duplicate system name \"" + system->name() +
                              "\"");
    systems_.push_back(std::move(system));
}

HnsPtr Catalog::find(std::string_view name) const {
    for (const auto& s : systems_)
        if (s->name() == name) return s;
    std::ostringstream msg;
    msg << "system \"" << name << "\" not found; available:";
    for (const auto& s : systems_) msg << ' ' << s->name();
    throw NotFoundError(msg.str());
}

bool Catalog::contains(std::string_view name) const {
    for (const auto& s : systems_)
        if (s->name() == name) return true;
    return false;
}

bool operator==(const Catalog& a, const Catalog& b) {
    if (a.systems_.size() != b.systems_.size()) return false;
    for (std::size_t i = 0; i < a.systems_.size(); ++i)
        if (!(*a.systems_[i] == *b.systems_[i])) return false;
    return true;
}

} // namespace hcs
