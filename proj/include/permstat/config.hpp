#pragma once

#include <string>

namespace permstat {

struct Config {
    int enumeration_cap = 11;
    std::string cache_dir;              // empty = caching off
    std::string output_format = "csv";  // csv | json
    int parallelism = 0;                // worker count; 0 = auto

    // Resolved worker count (>= 1); auto uses hardware concurrency.
    int workers() const;
};

// Flat `key = value` lines, '#' comments, values optionally double-quoted.
// Keys: enumeration_cap, cache_dir, output_format, parallelism (int or
// "auto"). Unknown keys and malformed values raise ParseError.
Config parse_config(const std::string& text);
Config load_config_file(const std::string& path);

// PERMSTAT_CACHE_DIR and PERMSTAT_PARALLELISM override the file values.
void apply_env_overrides(Config& cfg);

// "auto" -> 0, otherwise a positive worker count; ParseError on anything else.
int parse_parallelism_value(const std::string& value);

}  // namespace permstat
