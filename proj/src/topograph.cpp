#include "topo/topograph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

namespace {

std::array<Int, 3> sorted3(Int x, Int y, Int z) {
  std::array<Int, 3> t{std::move(x), std::move(y), std::move(z)};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

InvariantKind kind_of(const TopographInvariant& inv) {
  switch (inv.index()) {
    case 0: return InvariantKind::Well;
    case 1: return InvariantKind::River;
    case 2: return InvariantKind::Lake;
    case 3: return InvariantKind::Weir;
    case 4: return InvariantKind::LakePair;
    default: return InvariantKind::Zero;
  }
}

std::string kind_name(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Well: return "WELL";
    case InvariantKind::River: return "RIVER";
    case InvariantKind::Lake: return "LAKE";
    case InvariantKind::Weir: return "WEIR";
    case InvariantKind::LakePair: return "LAKEPAIR";
    case InvariantKind::Zero: return "ZERO";
  }
  return "?";
}

InvariantKind kind_from_name(const std::string& name) {
  if (name == "WELL") return InvariantKind::Well;
  if (name == "RIVER") return InvariantKind::River;
  if (name == "LAKE") return InvariantKind::Lake;
  if (name == "WEIR") return InvariantKind::Weir;
  if (name == "LAKEPAIR") return InvariantKind::LakePair;
  if (name == "ZERO") return InvariantKind::Zero;
  throw InvalidParameter("unknown invariant kind: " + name);
}

std::string to_string(const TopographInvariant& inv) {
  std::ostringstream os;
  if (const auto* w = std::get_if<Well>(&inv)) {
    os << "WELL[" << w->values[0] << "," << w->values[1] << "," << w->values[2] << "]";
  } else if (const auto* r = std::get_if<River>(&inv)) {
    os << "RIVER[" << r->values[0] << "," << r->values[1] << "," << r->values[2] << "]";
  } else if (const auto* l = std::get_if<Lake>(&inv)) {
    os << "LAKE[" << l->value << "]";
  } else if (const auto* we = std::get_if<Weir>(&inv)) {
    os << "WEIR[" << we->value << "]";
  } else if (const auto* lp = std::get_if<LakePair>(&inv)) {
    os << "LAKEPAIR[[" << lp->pairs[0].first << "," << lp->pairs[0].second << "],["
       << lp->pairs[1].first << "," << lp->pairs[1].second << "]]";
  } else {
    os << "ZERO";
  }
  return os.str();
}

TopographInvariant negate(const TopographInvariant& inv) {
  if (const auto* w = std::get_if<Well>(&inv)) {
    return Well{sorted3(Int(-w->values[0]), Int(-w->values[1]), Int(-w->values[2]))};
  }
  if (const auto* r = std::get_if<River>(&inv)) {
    return River{sorted3(Int(-r->values[0]), Int(-r->values[1]), Int(-r->values[2]))};
  }
  if (const auto* l = std::get_if<Lake>(&inv)) return Lake{Int(-l->value)};
  if (const auto* we = std::get_if<Weir>(&inv)) return *we;
  if (const auto* lp = std::get_if<LakePair>(&inv)) {
    LakePair out;
    for (std::size_t i = 0; i < 2; ++i) {
      out.pairs[i] = {Int(-lp->pairs[i].second), Int(-lp->pairs[i].first)};
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
  }
  return ZeroForm{};
}

DescentResult descend(const VertexTriple& t) {
  if (t.qa <= 0 || t.qb <= 0 || t.qc <= 0) throw NotAllPositive();
  auto v = sorted3(t.qa, t.qb, t.qc);
  for (;;) {
    if (v[2] <= v[0] + v[1]) return {true, v};
    Int next = 2 * (v[0] + v[1]) - v[2];
    v[2] = next;
    std::sort(v.begin(), v.end());
    if (next <= 0) return {false, v};
  }
}

bool RiverState::operator<(const RiverState& other) const {
  if (positive_side != other.positive_side) return positive_side < other.positive_side;
  if (negative_side != other.negative_side) return negative_side < other.negative_side;
  return behind < other.behind;
}

namespace {

RiverState advance(const RiverState& s, const Int& next) {
  // The new river edge at the head vertex keeps the flank whose sign the
  // new region does not have; the other flank becomes the region behind.
  if (next > 0) return {next, s.negative_side, s.positive_side};
  return {s.positive_side, next, s.negative_side};
}

}  // namespace

RiverResult trace_river(const VertexTriple& t, std::size_t step_cap) {
  auto v = sorted3(t.qa, t.qb, t.qc);
  if (v[0] >= 0 || v[2] <= 0 || v[1] == 0)
    throw InvalidParameter("river start must have mixed signs and no zero value");

  RiverState state{v[2], v[0], v[1]};
  std::map<RiverState, std::size_t> seen;
  std::vector<std::array<Int, 3>> triples;
  for (;;) {
    auto [it, inserted] = seen.emplace(state, triples.size());
    if (!inserted) {
      // one full period: every river vertex appeared exactly once since the
      // first visit of this state
      auto begin = triples.begin() + static_cast<std::ptrdiff_t>(it->second);
      return {RiverResult::Kind::Periodic, *std::min_element(begin, triples.end())};
    }
    Int next = neighbor_value(state.positive_side, state.negative_side, state.behind);
    if (next == 0) {
      return {RiverResult::Kind::ReachesLake,
              sorted3(state.positive_side, state.negative_side, Int(0))};
    }
    triples.push_back(sorted3(state.positive_side, state.negative_side, next));
    if (triples.size() > step_cap) throw PeriodCapExceeded(step_cap);
    state = advance(state, next);
  }
}

std::pair<Int, Int> reduce_lake_adjacent(const Int& a, const Int& b) {
  if (a == b) throw EqualValues();
  if (a > b) throw InvalidParameter("lake-adjacent pair must be sorted ascending");
  Int d = b - a;
  Int lo = window_mod(a, d, Int(1 - d));  // (-d, 0]
  Int hi = window_mod(a, d, Int(1));      // [1, d]
  return {lo, hi};
}

namespace {

// Finite river from a lake with canonical flanks (lo, hi) to the opposite
// lake; returns that lake's adjacent pair, already in the canonical window.
std::pair<Int, Int> opposite_lake_pair(const Int& lo, const Int& hi, std::size_t step_cap) {
  RiverState state{hi, lo, Int(0)};
  for (std::size_t steps = 0;; ++steps) {
    Int next = neighbor_value(state.positive_side, state.negative_side, state.behind);
    if (next == 0) return {state.negative_side, state.positive_side};
    if (steps > step_cap) throw PeriodCapExceeded(step_cap);
    state = advance(state, next);
  }
}

}  // namespace

TopographInvariant invariant(const BinaryQuadraticForm& f, std::size_t river_cap) {
  if (f.a == 0 && f.h == 0 && f.b == 0) return ZeroForm{};

  VertexTriple start = VertexTriple::of(f);
  std::array<Int, 3> v{start.qa, start.qb, start.qc};

  if (v[0] > 0 && v[1] > 0 && v[2] > 0) {
    DescentResult d = descend({v[0], v[1], v[2]});
    if (d.is_well) return Well{d.triple};
    v = d.triple;
  } else if (v[0] < 0 && v[1] < 0 && v[2] < 0) {
    DescentResult d = descend({Int(-v[0]), Int(-v[1]), Int(-v[2])});
    if (d.is_well) {
      return Well{sorted3(Int(-d.triple[0]), Int(-d.triple[1]), Int(-d.triple[2]))};
    }
    v = {Int(-d.triple[0]), Int(-d.triple[1]), Int(-d.triple[2])};
  }

  if (v[0] != 0 && v[1] != 0 && v[2] != 0) {
    RiverResult r = trace_river({v[0], v[1], v[2]}, river_cap);
    if (r.kind == RiverResult::Kind::Periodic) return River{r.triple};
    v = r.triple;  // lake vertex triple
  }

  // v contains a zero: the vertex touches a lake.  Drop one zero; the other
  // two values are consecutive on the lake boundary.
  std::vector<Int> rest;
  bool dropped = false;
  for (const Int& val : v) {
    if (val == 0 && !dropped) {
      dropped = true;
      continue;
    }
    rest.push_back(val);
  }
  std::sort(rest.begin(), rest.end());

  if (rest[0] == rest[1]) return Lake{rest[0]};  // nonzero: the zero form exited early

  auto [lo, hi] = reduce_lake_adjacent(rest[0], rest[1]);
  if (lo == 0) return Weir{hi};

  std::pair<Int, Int> first{lo, hi};
  std::pair<Int, Int> second = opposite_lake_pair(lo, hi, river_cap);
  LakePair out{{first, second}};
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

FormClass classify_by_discriminant(const BinaryQuadraticForm& f) {
  if (f.a == 0 && f.h == 0 && f.b == 0) return FormClass::Zero;
  Int d = discriminant(f);
  if (d < 0) return f.a > 0 ? FormClass::PositiveWell : FormClass::NegativeWell;
  if (d == 0) return FormClass::Lake;
  return is_perfect_square(d) ? FormClass::WeirOrLakePair : FormClass::River;
}

std::string class_name(FormClass c) {
  switch (c) {
    case FormClass::PositiveWell: return "positive-well";
    case FormClass::NegativeWell: return "negative-well";
    case FormClass::Zero: return "zero";
    case FormClass::Lake: return "lake";
    case FormClass::River: return "river";
    case FormClass::WeirOrLakePair: return "weir-or-lakepair";
  }
  return "?";
}

}  // namespace topo
