#pragma once

#include <optional>
#include <string>

#include "permstat/distribution.hpp"

namespace permstat {

// Cache file name for a coefficient row: FNV-1a hash of "stat|n|method",
// hex, with a .json suffix.
std::string cache_filename(const std::string& stat, int n, const std::string& method);

// {"stat": ..., "n": ..., "method": ..., "coeffs": ["72", ...]} — integers
// as decimal strings.
std::string distribution_to_json(const Distribution& d, const std::string& method);
Distribution distribution_from_json(const std::string& text);

// Atomic write (temp file + rename) under `dir`; creates the directory.
void cache_store(const std::string& dir, const Distribution& d,
                 const std::string& method);
// nullopt on miss; malformed entries raise ParseError.
std::optional<Distribution> cache_load(const std::string& dir, const std::string& stat,
                                       int n, const std::string& method);

}  // namespace permstat
