#pragma once

#include <optional>
#include <string>

#include "irrec/rational.hpp"

namespace irrec {
namespace cache {

/// Content-addressed on-disk memo cache, enabled by the IRREC_CACHE_DIR
/// environment variable. Each entry is one file named by the hash of its
/// canonical key, with the versioned header "IRREC1\n" followed by canonical
/// JSON {"key": ..., "value": {"num": "...", "den": "..."}}.
bool enabled();
std::string directory();

/// Canonical key for a count-family query.
std::string count_key(const std::string& family, int g, const std::vector<long>& mu);

std::optional<Rational> load(const std::string& key);
void store(const std::string& key, const Rational& value);

}  // namespace cache
}  // namespace irrec
