#pragma once

// JSON forms of quivers, seed patterns and friezes, and the on-disk pattern
// cache. Vertex indices and variable ids are 1-based in every file format.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cfl/cluster.hpp"
#include "cfl/frieze.hpp"
#include "cfl/quiver.hpp"

namespace cfl {

using Json = nlohmann::json;

/// {"rank": r, "arrows": [{"from": i, "to": j, "b": b, "c": c}]}
Json quiver_to_json(const ExchangeMatrix& m);
ExchangeMatrix quiver_from_json(const Json& j);

/// {"variables": [...], "clusters": [[ids]]}, the cluster lists in seed order.
Json pattern_to_json(const Pattern& p);

/// Everything needed to rebuild a finite pattern without recomputation.
Json pattern_to_cache_json(const Pattern& p);
Pattern pattern_from_cache_json(const Json& j);

/// {"type": "D5", "period": p, "rows": [[...]]}, one row per base vertex.
Json frieze_to_json(const IntFrieze& f);
/// The base is from_dynkin of the type unless given.
IntFrieze frieze_from_json(const Json& j, const std::optional<ExchangeMatrix>& base = std::nullopt);

/// Reads a quiver file or parses a type name such as "A1xG2".
ExchangeMatrix load_quiver(const std::string& source);

/// Enumerates the pattern of m, reusing a JSON file under $CFL_CACHE_DIR when
/// the variable is set.
Pattern cached_pattern(const ExchangeMatrix& m, std::size_t cap = 100000);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace cfl
