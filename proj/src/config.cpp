#include "permstat/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "permstat/set_spec.hpp"  // ParseError

namespace permstat {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

int parse_int(const std::string& key, const std::string& value, int min_value) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        throw ParseError(key + ": expected an integer, got '" + value + "'");
    }
    if (used != value.size())
        throw ParseError(key + ": trailing characters in '" + value + "'");
    if (v < min_value)
        throw ParseError(key + ": value " + value + " is below " +
                         std::to_string(min_value));
    return v;
}

void set_key(Config& cfg, const std::string& key, const std::string& value) {
    if (key == "enumeration_cap")
        cfg.enumeration_cap = parse_int(key, value, 0);
    else if (key == "cache_dir")
        cfg.cache_dir = value;
    else if (key == "output_format") {
        if (value != "csv" && value != "json")
            throw ParseError("output_format: expected csv or json, got '" + value +
                             "'");
        cfg.output_format = value;
    } else if (key == "parallelism")
        cfg.parallelism = parse_parallelism_value(value);
    else
        throw ParseError("unknown key '" + key + "'");
}

}  // namespace

int parse_parallelism_value(const std::string& value) {
    if (value == "auto")
        return 0;
    return parse_int("parallelism", value, 1);
}

int Config::workers() const {
    if (parallelism > 0)
        return parallelism;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) +
                             ": expected key = value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = unquote(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ParseError("config line " + std::to_string(lineno) + ": empty key");
        try {
            set_key(cfg, key, value);
        } catch (const ParseError& e) {
            throw ParseError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void apply_env_overrides(Config& cfg) {
    if (const char* dir = std::getenv("PERMSTAT_CACHE_DIR"))
        cfg.cache_dir = dir;
    if (const char* par = std::getenv("PERMSTAT_PARALLELISM"))
        cfg.parallelism = parse_parallelism_value(par);
}

}  // namespace permstat
