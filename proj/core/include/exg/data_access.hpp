#pragma once

#include <string>

namespace exg {

// Canonical serialization of the embedded curated tables (sorted keys,
// 2-space indent). Parsing and re-serializing reproduces it byte for byte;
// every row carries a citation field for audit.
std::string curated_tables_dump();

}  // namespace exg
