#pragma once

#include <map>
#include <string>
#include <utility>

#include "topo/seifert.hpp"

namespace topo {

enum class Provenance { Computed, CacheHit };

struct CellOutcome {
  bool distinguishable;
  InvariantKind type;  // type tag of invariant(Q1); Q0's tag is asserted equal
  std::string orbit_key;
  Provenance provenance;

  bool same_result(const CellOutcome& other) const {
    return distinguishable == other.distinguishable && type == other.type &&
           orbit_key == other.orbit_key;
  }
};

struct CachedOutcome {
  bool distinguishable;
  InvariantKind type;

  bool operator==(const CachedOutcome&) const = default;
};

// Keyed by the serialized orbit key; line-oriented on disk for mergeability.
using OrbitCache = std::map<std::string, CachedOutcome>;

struct GridRange {
  long k_min, k_max, n_min, n_max;
};

struct ScanGrid {
  Int p, q;
  GridRange range{};
  bool two_sided = false;
  bool partial = false;  // split panels legitimately omit cells
  std::map<std::pair<long, long>, CellOutcome> cells;

  long width() const { return range.k_max - range.k_min + 1; }
  long height() const { return range.n_max - range.n_min + 1; }
  bool complete() const;
};

struct ScanOptions {
  bool two_sided = false;
  unsigned jobs = 1;
};

/*
 * Fills every (k, n) cell of the grid, computing each <tau,rho>-orbit at
 * most once: cells are grouped by orbit key up front, one representative per
 * group is computed (in parallel when jobs > 1, each group an independent
 * work item), and results are merged afterwards.  The result is byte-stable
 * regardless of the job count.  A seed cache supplies already-known orbits
 * and receives all outcomes.  Form-level errors are rethrown with the
 * offending (k, n) attached.  The tau/rho symmetry audit runs on the
 * completed grid and aborts on any violation.
 */
ScanGrid scan(const Int& p, const Int& q, const GridRange& range, const ScanOptions& opts = {},
              OrbitCache* cache = nullptr);

// Cross-checks all in-range tau/rho-related cell pairs; throws Error with a
// diagnostic when two related cells disagree.
void audit_symmetries(const ScanGrid& grid);

// One grid per topograph type present; panels are marked partial.
std::map<InvariantKind, ScanGrid> split_by_type(const ScanGrid& grid);

// Emitters are byte-stable for fixed inputs.  Pixel layout follows the
// reference diagrams: n increases upward, k increases rightward.
// Orange = non-isomorphic, blue = isomorphic.
std::string emit_csv(const ScanGrid& grid);    // k,n,distinguishable,type,orbit_key
std::string emit_ppm(const ScanGrid& grid);    // P3
std::string emit_ascii(const ScanGrid& grid);  // '#' orange, '.' blue
std::string emit_svg(const ScanGrid& grid);
std::string emit_grid(const ScanGrid& grid, const std::string& format);

// One record per line: orbit_key<TAB>distinguishable<TAB>type.
std::string serialize_cache(const OrbitCache& cache);
OrbitCache parse_cache(const std::string& text);

// Missing file loads as an empty cache; unreadable/bad contents throw.
OrbitCache load_cache_file(const std::string& path);
void save_cache_file(const OrbitCache& cache, const std::string& path);

}  // namespace topo
