#include "permstat/cache.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace permstat {

namespace {

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace

std::string cache_filename(const std::string& stat, int n, const std::string& method) {
    return fnv1a_hex(stat + "|" + std::to_string(n) + "|" + method) + ".json";
}

std::string distribution_to_json(const Distribution& d, const std::string& method) {
    nlohmann::json j;
    j["stat"] = d.stat;
    j["n"] = d.n;
    j["method"] = method;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Bigint& c : d.coeffs)
        coeffs.push_back(to_decimal(c));
    j["coeffs"] = coeffs;
    return j.dump(2);
}

Distribution distribution_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cache entry is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("stat") || !j.contains("n") || !j.contains("coeffs"))
        throw ParseError("cache entry missing stat/n/coeffs");
    Distribution d;
    try {
        d.stat = j["stat"].get<std::string>();
        d.n = j["n"].get<int>();
        for (const auto& c : j["coeffs"])
            d.coeffs.push_back(from_decimal(c.get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cache entry has wrong field types: ") + e.what());
    }
    return d;
}

void cache_store(const std::string& dir, const Distribution& d,
                 const std::string& method) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const fs::path final_path = fs::path(dir) / cache_filename(d.stat, d.n, method);
    const fs::path tmp_path =
        final_path.parent_path() /
        (final_path.filename().string() + ".tmp" +
         std::to_string(static_cast<unsigned long long>(
             std::hash<std::string>{}(final_path.string()) ^
             static_cast<unsigned long long>(
                 std::chrono::steady_clock::now().time_since_epoch().count()))));
    {
        std::ofstream out(tmp_path);
        if (!out)
            throw ParseError("cannot write cache file '" + tmp_path.string() + "'");
        out << distribution_to_json(d, method) << "\n";
    }
    fs::rename(tmp_path, final_path);
}

std::optional<Distribution> cache_load(const std::string& dir, const std::string& stat,
                                       int n, const std::string& method) {
    namespace fs = std::filesystem;
    const fs::path path = fs::path(dir) / cache_filename(stat, n, method);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    Distribution d = distribution_from_json(buf.str());
    if (d.stat != stat || d.n != n)
        throw ParseError("cache entry at '" + path.string() +
                         "' does not match the requested row (hash collision?)");
    return d;
}

}  // namespace permstat
