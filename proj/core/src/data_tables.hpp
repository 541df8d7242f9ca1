#pragma once

// Internal access to the embedded curated tables. The document is a single
// versioned JSON object; every row carries a citation tag naming the table it
// came from so audits can trace provenance (`exg dump-data`).

#include <string>

#include "json.hpp"

namespace exg::data {

// Parsed embedded document (shared, read-only).
const nlohmann::json& curated();

// Canonical serialization (2-space indent, sorted keys). Re-parsing and
// re-serializing this string reproduces it byte for byte.
std::string canonical_dump();

}  // namespace exg::data
