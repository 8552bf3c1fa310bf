#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>

#include "topo/forms.hpp"

namespace topo {

/*
 * Complete GL2(Z)-isomorphism invariant of an integral binary quadratic
 * form, tagged by the shape of its topograph.  Payloads are canonical:
 * triples sorted ascending, weir values positive, lake-pair pairs reduced
 * to the window a <= 0 < b and sorted lexicographically.
 *
 * A sorted vertex triple determines the form up to GL2(Z) (superbase
 * permutations are unimodular), which is what makes Well and River
 * payloads legitimate canonical forms.
 *
 * The zero form gets its own tag, serialized as ZERO.  The reference
 * convention writes it LAKE[0]; lakes here always carry a nonzero value.
 */
struct Well {
  std::array<Int, 3> values;  // all the same strict sign
  bool operator==(const Well&) const = default;
};

struct River {
  std::array<Int, 3> values;  // mixed signs, none zero
  bool operator==(const River&) const = default;
};

struct Lake {
  Int value;  // nonzero
  bool operator==(const Lake&) const = default;
};

struct Weir {
  Int value;  // positive: a*xy and -a*xy are isomorphic via y -> -y
  bool operator==(const Weir&) const = default;
};

struct LakePair {
  std::array<std::pair<Int, Int>, 2> pairs;
  bool operator==(const LakePair&) const = default;
};

struct ZeroForm {
  bool operator==(const ZeroForm&) const = default;
};

using TopographInvariant = std::variant<Well, River, Lake, Weir, LakePair, ZeroForm>;

enum class InvariantKind { Well, River, Lake, Weir, LakePair, Zero };

InvariantKind kind_of(const TopographInvariant& inv);
std::string kind_name(InvariantKind kind);

// Parses the names emitted by kind_name; throws InvalidParameter otherwise.
InvariantKind kind_from_name(const std::string& name);

// Stable text record, e.g. WELL[2,3,4], LAKEPAIR[[-9,2],[-5,6]], ZERO.
std::string to_string(const TopographInvariant& inv);

// Invariant of -Q given the invariant of Q: payload values negate, Well and
// Lake flip sign, Weir and Zero are fixed.
TopographInvariant negate(const TopographInvariant& inv);

inline constexpr std::size_t kDefaultRiverCap = 1'000'000;

struct DescentResult {
  bool is_well;               // max <= min + middle reached with all values positive
  std::array<Int, 3> triple;  // sorted ascending; when !is_well it contains a value <= 0
};

/*
 * Repeatedly replaces the maximum m3 of a positive triple by
 * 2(m1+m2) - m3, which strictly decreases it, until either the well
 * condition m3 <= m1+m2 holds or a non-positive value shows up (the form
 * was not positive definite).  Throws NotAllPositive on bad input.
 */
DescentResult descend(const VertexTriple& t);

/*
 * Walk state on a river edge: the flanking values and the region behind.
 * The next region value is 2(positive_side + negative_side) - behind.
 */
struct RiverState {
  Int positive_side;  // > 0 at every step
  Int negative_side;  // < 0 at every step
  Int behind;

  bool operator==(const RiverState&) const = default;
  bool operator<(const RiverState& other) const;
};

struct RiverResult {
  enum class Kind { Periodic, ReachesLake };
  Kind kind;
  // Periodic: lexicographically smallest sorted vertex triple over one full
  // period.  ReachesLake: the lake vertex triple, containing a zero.
  std::array<Int, 3> triple;
};

/*
 * Traces the river from a mixed-sign zero-free vertex triple.  Periodicity
 * is detected by recurrence of the full RiverState, which subsumes the
 * single-triplet check; the collected triples between the two visits cover
 * exactly one period.  Throws PeriodCapExceeded past step_cap.
 */
RiverResult trace_river(const VertexTriple& t, std::size_t step_cap = kDefaultRiverCap);

/*
 * Canonical residues flanking a lake.  For sorted distinct values a < b
 * adjacent to a lake, returns (a', b') with a' <= 0 < b', b' - a' = b - a
 * and a' == b' == a (mod b-a).  a' == 0 signals a weir.  Throws EqualValues
 * when a == b (that vertex belongs to a lake, not a lake pair).
 */
std::pair<Int, Int> reduce_lake_adjacent(const Int& a, const Int& b);

// The complete invariant: equal for two forms iff they are GL2(Z)-isomorphic.
TopographInvariant invariant(const BinaryQuadraticForm& f,
                             std::size_t river_cap = kDefaultRiverCap);

// Topograph type predicted from the discriminant and leading sign alone.
enum class FormClass { PositiveWell, NegativeWell, Zero, Lake, River, WeirOrLakePair };

FormClass classify_by_discriminant(const BinaryQuadraticForm& f);
std::string class_name(FormClass c);

}  // namespace topo
