#pragma once

// Serialization: expansion JSON, a-point JSON lines, key=value job configs,
// and the on-disk a-point cache.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symzeta/apoint_locator.hpp"
#include "symzeta/core.hpp"
#include "symzeta/partitions.hpp"

namespace symzeta {

inline constexpr const char* code_version = "symzeta-1.0.0";

using json = nlohmann::json;

inline json to_json(ComplexPoint z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline ComplexPoint complex_from_json(const json& j) {
    require(j.is_object() && j.contains("re") && j.contains("im"), ErrorCode::InvalidArgument,
            "complex values must be {re, im} objects");
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

inline json expansion_to_json(const Weights& w, const std::vector<HoffmanTerm>& terms) {
    json out;
    out["weights"] = std::vector<double>(w.values().begin(), w.values().end());
    out["A"] = w.total();
    out["B"] = w.b_constant();
    out["M"] = w.m_constant();
    json list = json::array();
    for (const auto& t : terms) list.push_back(json{{"coefficient", t.coefficient}, {"block_sums", t.block_sums}});
    out["terms"] = std::move(list);
    return out;
}

inline json to_json(const APoint& p) {
    return json{{"beta", p.beta},
                {"gamma", p.gamma},
                {"multiplicity", p.multiplicity},
                {"residual", p.residual},
                {"newton_iters", p.newton_iters}};
}

inline APoint apoint_from_json(const json& j) {
    APoint p;
    p.beta = j.at("beta").get<double>();
    p.gamma = j.at("gamma").get<double>();
    p.multiplicity = j.at("multiplicity").get<int>();
    p.residual = j.at("residual").get<double>();
    p.newton_iters = j.value("newton_iters", 0);
    require(p.multiplicity >= 1, ErrorCode::InvalidArgument, "multiplicity must be positive");
    return p;
}

inline void write_apoints(std::ostream& os, const std::vector<APoint>& points) {
    for (const auto& p : points) os << to_json(p).dump() << '\n';
}

/// Parses JSON lines; blank lines are skipped. Throws InvalidArgument on a
/// malformed record.
inline std::vector<APoint> read_apoints(std::istream& is) {
    std::vector<APoint> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(apoint_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidArgument, "bad a-point record on line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<APoint> read_apoints_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MissingPoints, "cannot open a-point file " + path.string());
    return read_apoints(in);
}

inline void write_apoints_file(const std::filesystem::path& path, const std::vector<APoint>& points) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    write_apoints(out, points);
}

struct JobConfig {
    std::vector<double> weights{1.0, 1.0};
    double a_re = 0.0;
    double a_im = 0.0;
    Rectangle region{-5.0, 10.0, 0.5, 100.0};
    EvalPrecision precision{};
    std::vector<double> T_grid{50.0, 100.0, 200.0};
    double y = 5.0;
    std::string output_dir = "out";

    TargetValue target() const { return TargetValue{{a_re, a_im}}; }

    void validate() const {
        require(weights.size() >= 2, ErrorCode::InvalidArgument, "at least two weights are required");
        require(static_cast<int>(weights.size()) <= max_rank, ErrorCode::RankTooLarge, "rank above 10 is not supported");
        require(std::isfinite(a_re) && std::isfinite(a_im), ErrorCode::InvalidArgument, "a must be finite");
        region.validate();
        precision.validate();
        require(std::isfinite(y) && y > 0.0, ErrorCode::InvalidArgument, "y must be positive");
        for (double T : T_grid) require(std::isfinite(T) && T > region.t_min, ErrorCode::InvalidArgument, "T must exceed t_min");
        require(!output_dir.empty(), ErrorCode::InvalidArgument, "output_dir must not be empty");
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "bad number for " + key + ": '" + text + "'");
    }
    require(used == text.size(), ErrorCode::InvalidArgument, "bad number for " + key + ": '" + text + "'");
    return v;
}

} // namespace detail

inline std::vector<double> parse_number_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(detail::parse_double(key, detail::trim(item)));
    require(!out.empty(), ErrorCode::InvalidArgument, key + " must not be empty");
    return out;
}

/// Applies one key=value setting. Unknown keys are usage errors.
inline void apply_setting(JobConfig& cfg, const std::string& key, const std::string& value) {
    auto num = [&] { return detail::parse_double(key, value); };
    if (key == "weights") cfg.weights = parse_number_list(key, value);
    else if (key == "a_re") cfg.a_re = num();
    else if (key == "a_im") cfg.a_im = num();
    else if (key == "sigma_min") cfg.region.sigma_min = num();
    else if (key == "sigma_max") cfg.region.sigma_max = num();
    else if (key == "t_min") cfg.region.t_min = num();
    else if (key == "t_max") cfg.region.t_max = num();
    else if (key == "target_abs_err") cfg.precision.target_abs_err = num();
    else if (key == "max_terms") cfg.precision.max_terms = static_cast<std::int64_t>(num());
    else if (key == "T_grid") cfg.T_grid = parse_number_list(key, value);
    else if (key == "y") cfg.y = num();
    else if (key == "output_dir") cfg.output_dir = value;
    else throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
}

/// `key = value` lines; `#` starts a comment.
inline JobConfig parse_config(std::istream& is, JobConfig cfg = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        require(eq != std::string::npos, ErrorCode::InvalidArgument,
                "config line " + std::to_string(lineno) + " is not key = value");
        apply_setting(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
    }
    return cfg;
}

inline JobConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config " + path.string());
    return parse_config(in);
}

inline std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/// On-disk store of located a-points keyed by everything that determines them.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// SYMZETA_CACHE_DIR if set, else .symzeta-cache in the working directory.
    static ResultCache from_environment() {
        const char* env = std::getenv("SYMZETA_CACHE_DIR");
        return ResultCache(env != nullptr && *env != '\0' ? std::filesystem::path(env)
                                                           : std::filesystem::path(".symzeta-cache"));
    }

    const std::filesystem::path& directory() const noexcept { return dir_; }

    static std::string key_text(const std::vector<double>& weights, ComplexPoint a, const Rectangle& region,
                                const EvalPrecision& prec) {
        json j;
        j["version"] = code_version;
        j["weights"] = weights;
        j["a"] = to_json(a);
        j["region"] = {region.sigma_min, region.sigma_max, region.t_min, region.t_max};
        j["precision"] = {prec.target_abs_err, prec.max_terms};
        return j.dump();
    }

    static std::string key(const std::vector<double>& weights, ComplexPoint a, const Rectangle& region,
                           const EvalPrecision& prec) {
        return hex_key(key_text(weights, a, region, prec));
    }

    std::filesystem::path path_for(const std::string& k) const { return dir_ / (k + ".jsonl"); }

    bool contains(const std::string& key_text_value) const {
        return std::filesystem::exists(path_for(hex_key(key_text_value)));
    }

    /// The cached list, or nothing when absent. A file that does not parse or
    /// whose header does not match is reported on `warn` and treated as absent.
    std::optional<std::vector<APoint>> load(const std::string& key_text_value, std::ostream& warn = std::cerr) const {
        const auto path = path_for(hex_key(key_text_value));
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        try {
            std::string header_line;
            require(static_cast<bool>(std::getline(in, header_line)), ErrorCode::InvalidArgument, "empty cache file");
            const json header = json::parse(header_line);
            require(header.at("key").get<std::string>() == key_text_value, ErrorCode::InvalidArgument, "key mismatch");
            const auto expected = header.at("records").get<std::size_t>();
            auto points = read_apoints(in);
            require(points.size() == expected, ErrorCode::InvalidArgument, "record count mismatch");
            return points;
        } catch (const std::exception& e) {
            warn << "warning: ignoring corrupted cache entry " << path.string() << " (" << e.what() << "); recomputing\n";
            return std::nullopt;
        }
    }

    void store(const std::string& key_text_value, const std::vector<APoint>& points) const {
        std::filesystem::create_directories(dir_);
        const auto path = path_for(hex_key(key_text_value));
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache file " + tmp);
            out << json{{"key", key_text_value}, {"records", points.size()}}.dump() << '\n';
            write_apoints(out, points);
        }
        std::filesystem::rename(tmp, path);
    }

private:
    static std::string hex_key(const std::string& text) {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
        return buf;
    }

    std::filesystem::path dir_;
};

} // namespace symzeta
