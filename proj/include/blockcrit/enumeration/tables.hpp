#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "blockcrit/enumeration/coefficients.hpp"
#include "blockcrit/enumeration/cubic.hpp"
#include "blockcrit/enumeration/trees.hpp"
#include "blockcrit/error.hpp"

namespace blockcrit::enumeration {

inline constexpr const char* kTablesFormat = "blockcrit-tables";
inline constexpr int kTablesVersion = 1;

/// Every exact coefficient the analysis needs, for excess up to `rmax`.
struct CoeffTables {
    int rmax = 0;
    /// t[n] for n = 0 .. max(2, rmax); t[0] is a placeholder.
    std::vector<BigInt> t;
    /// g(s, d) for all s + 2d = 3r, 1 <= r <= rmax.
    std::map<std::pair<int, int>, BigInt> g;
    /// b[r-1] = b_r.
    std::vector<BigRational> b;
    /// c_{r,d}, 1 <= r <= rmax, 0 <= d <= 2r-1.
    CoeffGrid c;
    /// e_{r,d}(z) from the same-d recurrence, plus e_{0,0} = 1.
    PolyGrid e;
    /// e_{r,d}(z) from the full exponential composition.
    PolyGrid e_mixed;

    BigRational b_at(int r) const {
        if (r < 1 || r > rmax)
            throw ValidationError("b_" + std::to_string(r) + " not in tables built for rmax = " +
                                  std::to_string(rmax));
        return b[r - 1];
    }

    friend bool operator==(const CoeffTables&, const CoeffTables&) = default;
};

inline BigRational coeff_c(int r, int d, const CoeffTables& tables) {
    if (r < 1) throw ValidationError("coeff_c: need r >= 1, got " + std::to_string(r));
    if (d > 2 * r - 1) return BigRational(0);
    if (r > tables.rmax)
        throw ValidationError("coeff_c: c_{" + std::to_string(r) + "," + std::to_string(d) +
                              "} requested from tables built for rmax = " + std::to_string(tables.rmax));
    return coeff_c(r, d, std::span<const BigRational>(tables.b).first(static_cast<std::size_t>(r)));
}

namespace detail {

inline const RatPoly& poly_lookup(const PolyGrid& grid, int r, int d, int rmax, const char* what) {
    static const RatPoly zero;
    if (r < 0 || d < 0) throw ValidationError(std::string(what) + ": negative index");
    if (r == 0) {
        if (d == 0) return grid.at({0, 0});
        return zero;
    }
    if (d > 2 * r - 1) return zero;
    if (r > rmax)
        throw ValidationError(std::string(what) + ": e_{" + std::to_string(r) + "," + std::to_string(d) +
                              "} requested from tables built for rmax = " + std::to_string(rmax));
    return grid.at({r, d});
}

} // namespace detail

/// e_{r,d}(z) (same-d recurrence). Zero for d > 2r-1.
inline RatPoly poly_e(int r, int d, const CoeffTables& tables) {
    return detail::poly_lookup(tables.e, r, d, tables.rmax, "poly_e");
}

/// e_{r,d}(z) from the full exponential composition. Zero for d > 2r-1.
inline RatPoly poly_e_mixed(int r, int d, const CoeffTables& tables) {
    return detail::poly_lookup(tables.e_mixed, r, d, tables.rmax, "poly_e_mixed");
}

/// Builds all tables for excess 1 .. rmax. Cost is dominated by U_{2 rmax},
/// which has p(2 rmax - 2) monomials.
inline CoeffTables tables_build(int rmax) {
    if (rmax < 1) throw ValidationError("tables_build: need rmax >= 1, got " + std::to_string(rmax));
    CoeffTables out;
    out.rmax = rmax;

    CubicBlockCounter counter;
    out.t = counter.t(static_cast<unsigned>(std::max(2, rmax)));
    for (int r = 1; r <= rmax; ++r) {
        out.b.push_back(counter.b(r));
        for (int d = 0; 2 * d <= 3 * r; ++d) out.g[{3 * r - 2 * d, d}] = counter.g(3 * r - 2 * d, d);
    }

    for (int r = 1; r <= rmax; ++r) out.c[{r, 0}] = out.b[r - 1];
    const int dmax = 2 * rmax - 1;
    if (dmax >= 1) {
        const auto trees = tree_gf_sequence(static_cast<unsigned>(dmax + 1));
        for (int d = 1; d <= dmax; ++d) {
            auto column = coeff_c_column(d, rmax, out.b, trees[d - 1]);
            for (int r = 1; r <= rmax; ++r)
                if (d <= 2 * r - 1) out.c[{r, d}] = column[r - 1];
        }
    }

    out.e = poly_e_table(out.c, rmax);
    out.e_mixed = poly_e_mixed_table(out.c, rmax);
    return out;
}

namespace detail {

inline nlohmann::json rational_json(const BigRational& q) {
    return {{"num", exactalg::numerator_of(q).str()}, {"den", exactalg::denominator_of(q).str()}};
}

inline BigRational rational_from_json(const nlohmann::json& j) {
    return exactalg::parse_rational(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

inline nlohmann::json poly_grid_json(const PolyGrid& grid) {
    auto arr = nlohmann::json::array();
    for (const auto& [key, p] : grid) {
        auto coeffs = nlohmann::json::array();
        for (const auto& q : p.coeffs()) coeffs.push_back(rational_json(q));
        arr.push_back({{"r", key.first}, {"d", key.second}, {"coeffs", coeffs}});
    }
    return arr;
}

inline PolyGrid poly_grid_from_json(const nlohmann::json& arr) {
    PolyGrid grid;
    for (const auto& item : arr) {
        std::vector<BigRational> coeffs;
        for (const auto& q : item.at("coeffs")) coeffs.push_back(rational_from_json(q));
        grid[{item.at("r").get<int>(), item.at("d").get<int>()}] = RatPoly(std::move(coeffs));
    }
    return grid;
}

} // namespace detail

/// Versioned JSON document; every number is an exact decimal string.
inline nlohmann::json tables_to_json(const CoeffTables& tables) {
    using detail::rational_json;
    nlohmann::json j;
    j["format"] = kTablesFormat;
    j["version"] = kTablesVersion;
    j["rmax"] = tables.rmax;

    auto t = nlohmann::json::array();
    for (const auto& v : tables.t) t.push_back(v.str());
    j["t"] = t;

    auto g = nlohmann::json::array();
    for (const auto& [key, v] : tables.g) g.push_back({{"s", key.first}, {"d", key.second}, {"value", v.str()}});
    j["g"] = g;

    auto b = nlohmann::json::array();
    for (std::size_t r = 0; r < tables.b.size(); ++r)
        b.push_back({{"r", r + 1}, {"value", rational_json(tables.b[r])}});
    j["b"] = b;

    auto c = nlohmann::json::array();
    for (const auto& [key, v] : tables.c) c.push_back({{"r", key.first}, {"d", key.second}, {"value", rational_json(v)}});
    j["c"] = c;

    j["e"] = detail::poly_grid_json(tables.e);
    j["e_mixed"] = detail::poly_grid_json(tables.e_mixed);
    return j;
}

inline CoeffTables tables_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format").get<std::string>() != kTablesFormat)
            throw IoError("not a " + std::string(kTablesFormat) + " document");
        const int version = j.at("version").get<int>();
        if (version != kTablesVersion)
            throw IoError("unsupported tables version " + std::to_string(version) + " (expected " +
                          std::to_string(kTablesVersion) + ")");
        CoeffTables out;
        out.rmax = j.at("rmax").get<int>();
        for (const auto& v : j.at("t")) out.t.push_back(exactalg::parse_int(v.get<std::string>()));
        for (const auto& item : j.at("g"))
            out.g[{item.at("s").get<int>(), item.at("d").get<int>()}] =
                exactalg::parse_int(item.at("value").get<std::string>());
        for (const auto& item : j.at("b")) out.b.push_back(detail::rational_from_json(item.at("value")));
        for (const auto& item : j.at("c"))
            out.c[{item.at("r").get<int>(), item.at("d").get<int>()}] = detail::rational_from_json(item.at("value"));
        out.e = detail::poly_grid_from_json(j.at("e"));
        out.e_mixed = detail::poly_grid_from_json(j.at("e_mixed"));
        if (out.rmax < 1 || out.b.size() != static_cast<std::size_t>(out.rmax))
            throw IoError("tables document is inconsistent with rmax = " + std::to_string(out.rmax));
        return out;
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(std::string("malformed tables document: ") + ex.what());
    } catch (const ValidationError& ex) {
        throw IoError(std::string("malformed tables document: ") + ex.what());
    }
}

inline std::string tables_dump(const CoeffTables& tables) { return tables_to_json(tables).dump(1) + "\n"; }

inline void tables_save(const CoeffTables& tables, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << tables_dump(tables);
    if (!out) throw IoError("failed writing " + path.string());
}

inline CoeffTables tables_load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(path.string() + ": " + ex.what());
    }
    return tables_from_json(j);
}

} // namespace blockcrit::enumeration
