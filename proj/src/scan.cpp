#include "topo/scan.hpp"

#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

bool ScanGrid::complete() const {
  return !partial &&
         cells.size() == static_cast<std::size_t>(width()) * static_cast<std::size_t>(height());
}

namespace {

struct OrbitGroup {
  std::string key;
  SeifertParams representative;
  std::vector<std::pair<long, long>> members;
  bool from_cache = false;
  CachedOutcome outcome{};
};

CachedOutcome compute_outcome(const SeifertParams& params, bool two_sided) {
  SeifertFormPair f = seifert_forms(params);
  TopographInvariant i0 = invariant(f.q0);
  TopographInvariant i1 = invariant(f.q1);
  // Q0 and Q1 are isomorphic over the rationals, so their topographs always
  // have the same type; a mismatch means the pipeline is broken.
  if (kind_of(i0) != kind_of(i1)) {
    throw Error("topograph type mismatch: Q0 is " + to_string(i0) + ", Q1 is " + to_string(i1));
  }
  bool distinct = !(i0 == i1);
  if (two_sided && distinct) distinct = !(i0 == invariant(-f.q1));
  return {distinct, kind_of(i1)};
}

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Error("grid coordinate out of range");
  return v.get_si();
}

}  // namespace

ScanGrid scan(const Int& p, const Int& q, const GridRange& range, const ScanOptions& opts,
              OrbitCache* cache) {
  if (range.k_min > range.k_max || range.n_min > range.n_max)
    throw InvalidParameter("empty scan range");

  ScanGrid grid;
  grid.p = p;
  grid.q = q;
  grid.range = range;
  grid.two_sided = opts.two_sided;

  // group cells by orbit key; the first cell in scan order is the representative
  std::vector<OrbitGroup> groups;
  std::map<std::string, std::size_t> group_index;
  for (long k = range.k_min; k <= range.k_max; ++k) {
    for (long n = range.n_min; n <= range.n_max; ++n) {
      SeifertParams params = SeifertParams::make(p, q, Int(k), Int(n));
      std::string key = to_string(orbit_key(params));
      auto [it, inserted] = group_index.emplace(key, groups.size());
      if (inserted) {
        OrbitGroup g;
        g.key = key;
        g.representative = params;
        if (cache != nullptr) {
          auto hit = cache->find(key);
          if (hit != cache->end()) {
            g.from_cache = true;
            g.outcome = hit->second;
          }
        }
        groups.push_back(std::move(g));
      }
      groups[it->second].members.emplace_back(k, n);
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!groups[i].from_cache) pending.push_back(i);
  }

  unsigned jobs = opts.jobs == 0 ? 1 : opts.jobs;
  auto worker = [&](unsigned tid, std::exception_ptr& failure) {
    try {
      for (std::size_t i = tid; i < pending.size(); i += jobs) {
        OrbitGroup& g = groups[pending[i]];
        try {
          g.outcome = compute_outcome(g.representative, opts.two_sided);
        } catch (const Error& e) {
          std::ostringstream os;
          os << e.what() << " at (k,n)=(" << g.members.front().first << ","
             << g.members.front().second << ")";
          throw Error(os.str());
        }
      }
    } catch (...) {
      failure = std::current_exception();
    }
  };

  if (jobs == 1) {
    std::exception_ptr failure;
    worker(0, failure);
    if (failure) std::rethrow_exception(failure);
  } else {
    std::vector<std::exception_ptr> failures(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t, std::ref(failures[t]));
    for (auto& th : threads) th.join();
    for (auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  for (const OrbitGroup& g : groups) {
    bool rep_filled = g.from_cache;  // a cached orbit never counts as computed
    for (const auto& cell : g.members) {
      CellOutcome out;
      out.distinguishable = g.outcome.distinguishable;
      out.type = g.outcome.type;
      out.orbit_key = g.key;
      out.provenance = rep_filled ? Provenance::CacheHit : Provenance::Computed;
      rep_filled = true;
      grid.cells.emplace(cell, std::move(out));
    }
    if (cache != nullptr) (*cache)[g.key] = g.outcome;
  }

  audit_symmetries(grid);
  return grid;
}

void audit_symmetries(const ScanGrid& grid) {
  auto check = [&](long k, long n, const SeifertParams& image, const char* name) {
    long ik = to_long(image.k);
    long in = to_long(image.n);
    if (ik < grid.range.k_min || ik > grid.range.k_max) return;
    if (in < grid.range.n_min || in > grid.range.n_max) return;
    auto here = grid.cells.find({k, n});
    auto there = grid.cells.find({ik, in});
    if (here == grid.cells.end() || there == grid.cells.end()) return;
    if (here->second.distinguishable != there->second.distinguishable) {
      std::ostringstream os;
      os << "symmetry audit failed: (" << k << "," << n << ") and its " << name << "-image ("
         << ik << "," << in << ") disagree";
      throw Error(os.str());
    }
  };
  for (const auto& [cell, outcome] : grid.cells) {
    (void)outcome;
    SeifertParams params = SeifertParams::make(grid.p, grid.q, Int(cell.first), Int(cell.second));
    check(cell.first, cell.second, tau(params), "tau");
    check(cell.first, cell.second, rho(params), "rho");
  }
}

std::map<InvariantKind, ScanGrid> split_by_type(const ScanGrid& grid) {
  if (!grid.complete()) throw IncompleteGrid();
  std::map<InvariantKind, ScanGrid> panels;
  for (const auto& [cell, outcome] : grid.cells) {
    auto it = panels.find(outcome.type);
    if (it == panels.end()) {
      ScanGrid panel;
      panel.p = grid.p;
      panel.q = grid.q;
      panel.range = grid.range;
      panel.two_sided = grid.two_sided;
      panel.partial = true;
      it = panels.emplace(outcome.type, std::move(panel)).first;
    }
    it->second.cells.emplace(cell, outcome);
  }
  return panels;
}

namespace {

void require_emittable(const ScanGrid& grid) {
  if (!grid.partial && !grid.complete()) throw IncompleteGrid();
}

}  // namespace

std::string emit_csv(const ScanGrid& grid) {
  require_emittable(grid);
  std::ostringstream os;
  os << "k,n,distinguishable,type,orbit_key\n";
  for (const auto& [cell, outcome] : grid.cells) {
    os << cell.first << "," << cell.second << "," << (outcome.distinguishable ? 1 : 0) << ","
       << kind_name(outcome.type) << "," << outcome.orbit_key << "\n";
  }
  return os.str();
}

namespace {

constexpr const char* kOrangeRgb = "255 128 0";
constexpr const char* kBlueRgb = "0 64 255";
constexpr const char* kBlankRgb = "255 255 255";
constexpr const char* kOrangeHex = "#ff8000";
constexpr const char* kBlueHex = "#0040ff";

}  // namespace

std::string emit_ppm(const ScanGrid& grid) {
  require_emittable(grid);
  std::ostringstream os;
  os << "P3\n" << grid.width() << " " << grid.height() << "\n255\n";
  for (long n = grid.range.n_max; n >= grid.range.n_min; --n) {
    for (long k = grid.range.k_min; k <= grid.range.k_max; ++k) {
      if (k > grid.range.k_min) os << " ";
      auto it = grid.cells.find({k, n});
      if (it == grid.cells.end()) {
        os << kBlankRgb;
      } else {
        os << (it->second.distinguishable ? kOrangeRgb : kBlueRgb);
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string emit_ascii(const ScanGrid& grid) {
  require_emittable(grid);
  std::ostringstream os;
  for (long n = grid.range.n_max; n >= grid.range.n_min; --n) {
    for (long k = grid.range.k_min; k <= grid.range.k_max; ++k) {
      auto it = grid.cells.find({k, n});
      if (it == grid.cells.end()) {
        os << ' ';
      } else {
        os << (it->second.distinguishable ? '#' : '.');
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string emit_svg(const ScanGrid& grid) {
  require_emittable(grid);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << grid.width() << "\" height=\""
     << grid.height() << "\" viewBox=\"0 0 " << grid.width() << " " << grid.height()
     << "\" shape-rendering=\"crispEdges\">\n";
  for (const auto& [cell, outcome] : grid.cells) {
    long x = cell.first - grid.range.k_min;
    long y = grid.range.n_max - cell.second;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"1\" height=\"1\" fill=\""
       << (outcome.distinguishable ? kOrangeHex : kBlueHex) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_grid(const ScanGrid& grid, const std::string& format) {
  if (format == "csv") return emit_csv(grid);
  if (format == "ppm") return emit_ppm(grid);
  if (format == "ascii") return emit_ascii(grid);
  if (format == "svg") return emit_svg(grid);
  throw InvalidParameter("unknown grid format: " + format);
}

std::string serialize_cache(const OrbitCache& cache) {
  std::ostringstream os;
  for (const auto& [key, outcome] : cache) {
    os << key << "\t" << (outcome.distinguishable ? 1 : 0) << "\t" << kind_name(outcome.type)
       << "\n";
  }
  return os.str();
}

OrbitCache parse_cache(const std::string& text) {
  OrbitCache cache;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos)
      throw InvalidParameter("bad cache record on line " + std::to_string(lineno));
    std::string key = line.substr(0, tab1);
    std::string flag = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string type = line.substr(tab2 + 1);
    if (flag != "0" && flag != "1")
      throw InvalidParameter("bad cache flag on line " + std::to_string(lineno));
    cache[key] = {flag == "1", kind_from_name(type)};
  }
  return cache;
}

OrbitCache load_cache_file(const std::string& path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path);
  if (!in) throw Error("cannot read cache file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cache(buffer.str());
}

void save_cache_file(const OrbitCache& cache, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write cache file " + path);
  out << serialize_cache(cache);
  if (!out) throw Error("failed writing cache file " + path);
}

}  // namespace topo
