#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "cy2/category.hpp"
#include "cy2/torsion.hpp"

namespace cy2 {

/// Bumped whenever enumeration output could change.
inline constexpr int kCodeVersion = 1;

/// File for this spec under $CY2_CACHE_DIR, or nullopt when the variable is unset.
std::optional<std::filesystem::path> cache_path(const CategorySpec& spec);

/// enumerate_halves, memoized on disk when CY2_CACHE_DIR is set. The
/// brute-force path is never cached. A stale or corrupt file is ignored
/// and overwritten.
std::vector<IndecSet> enumerate_halves_cached(const CategoryTables& tables,
                                              const EnumerateOptions& opts = {});

}  // namespace cy2
