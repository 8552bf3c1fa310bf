#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "topo/errors.hpp"
#include "topo/render.hpp"
#include "topo/scan.hpp"
#include "topo/seifert.hpp"
#include "topo/topograph.hpp"

namespace {

topo::Int parse_int(const std::string& text) {
  try {
    return topo::Int(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("not an integer: " + text);
  }
}

std::string polynomial_str(const topo::BinaryQuadraticForm& f) {
  std::ostringstream os;
  os << f.a << "*x^2 + " << f.h << "*xy + " << f.b << "*y^2";
  return os.str();
}

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw topo::Error("cannot write " + path);
  out << payload;
}

struct InvariantArgs {
  std::string a, h, b;
};

struct CompareArgs {
  std::string a0, h0, b0, a1, h1, b1;
};

struct SeifertArgs {
  std::string p, q, k, n;
};

struct ScanArgs {
  std::string p, q;
  long size = 30;
  std::string out;
  std::string format = "csv";
  std::string cache;
  unsigned jobs = 1;
  bool two_sided = false;
  std::string split;
};

struct RenderArgs {
  std::string a, h, b;
  int depth = 3;
  std::string format = "dot";
};

int run_invariant(const InvariantArgs& args) {
  topo::BinaryQuadraticForm f{parse_int(args.a), parse_int(args.h), parse_int(args.b)};
  std::cout << topo::to_string(topo::invariant(f)) << "\n";
  return 0;
}

int run_compare(const CompareArgs& args) {
  topo::BinaryQuadraticForm f0{parse_int(args.a0), parse_int(args.h0), parse_int(args.b0)};
  topo::BinaryQuadraticForm f1{parse_int(args.a1), parse_int(args.h1), parse_int(args.b1)};
  auto i0 = topo::invariant(f0);
  auto i1 = topo::invariant(f1);
  std::cout << (i0 == i1 ? "EQUAL" : "DIFFERENT") << "\n";
  std::cout << "invariant" << topo::to_string(f0) << " = " << topo::to_string(i0) << "\n";
  std::cout << "invariant" << topo::to_string(f1) << " = " << topo::to_string(i1) << "\n";
  return 0;
}

int run_seifert(const SeifertArgs& args) {
  auto params = topo::SeifertParams::make(parse_int(args.p), parse_int(args.q),
                                          parse_int(args.k), parse_int(args.n));
  auto mats = topo::seifert_matrices(params);
  auto forms = topo::seifert_forms(params);
  std::cout << "params: p=" << params.p << " q=" << params.q << " k=" << params.k
            << " n=" << params.n << " (r=" << params.r << " s=" << params.s << ")";
  if (params.mirrored) std::cout << "  [mirror of the requested (p,q,k,n)]";
  std::cout << "\n";
  std::cout << "V0 = " << topo::to_string(mats.v0) << "\n";
  std::cout << "V1 = " << topo::to_string(mats.v1) << "\n";
  std::cout << "Q0 = " << topo::to_string(forms.q0) << "  " << polynomial_str(forms.q0) << "\n";
  std::cout << "Q1 = " << topo::to_string(forms.q1) << "  " << polynomial_str(forms.q1) << "\n";
  std::cout << "invariant(Q0) = " << topo::to_string(topo::invariant(forms.q0)) << "\n";
  std::cout << "invariant(Q1) = " << topo::to_string(topo::invariant(forms.q1)) << "\n";
  std::cout << "distinguishable: " << (topo::distinguishable(params) ? "yes" : "no") << "\n";
  std::cout << "oriented_pair_distinct: "
            << (topo::oriented_pair_distinct(params) ? "yes" : "no") << "\n";
  std::cout << "main_bound_holds: " << (topo::thm_main_bound(params) ? "yes" : "no") << "\n";
  std::cout << "parabola_alexander_trivial: "
            << (topo::parabola_alexander_trivial(params) ? "yes" : "no") << "\n";
  topo::Int c = topo::alexander_coefficient(params);
  std::cout << "alexander: C=" << c << ", Delta(t) = " << c << "*t^2 + " << (1 - 2 * c)
            << "*t + " << c << "\n";
  std::cout << "orbit_key: " << topo::to_string(topo::orbit_key(params)) << "\n";
  if (params.n == 0) {
    std::cout << "n_zero_k_threshold: " << topo::to_string(topo::n_zero_k_threshold(params))
              << "\n";
  }
  return 0;
}

int run_scan(const ScanArgs& args) {
  topo::Int p = parse_int(args.p);
  topo::Int q = parse_int(args.q);
  if (args.size < 0) throw CLI::ValidationError("--size must be nonnegative");
  topo::GridRange range{-args.size, args.size, -args.size, args.size};

  topo::OrbitCache cache;
  if (!args.cache.empty()) cache = topo::load_cache_file(args.cache);

  topo::ScanOptions opts;
  opts.two_sided = args.two_sided;
  opts.jobs = args.jobs == 0 ? 1 : args.jobs;

  topo::ScanGrid grid = topo::scan(p, q, range, opts, &cache);
  if (!args.cache.empty()) topo::save_cache_file(cache, args.cache);

  if (!args.split.empty()) {
    auto panels = topo::split_by_type(grid);
    topo::InvariantKind wanted = topo::kind_from_name(args.split);
    auto it = panels.find(wanted);
    if (it == panels.end()) {
      // an empty panel of the right shape, so the output dimensions still match
      topo::ScanGrid empty;
      empty.p = grid.p;
      empty.q = grid.q;
      empty.range = grid.range;
      empty.partial = true;
      write_output(topo::emit_grid(empty, args.format), args.out);
    } else {
      write_output(topo::emit_grid(it->second, args.format), args.out);
    }
    return 0;
  }
  write_output(topo::emit_grid(grid, args.format), args.out);
  return 0;
}

int run_render(const RenderArgs& args) {
  topo::BinaryQuadraticForm f{parse_int(args.a), parse_int(args.h), parse_int(args.b)};
  if (args.format == "dot") {
    std::cout << topo::render_topograph_dot(f, args.depth);
  } else if (args.format == "ascii") {
    std::cout << topo::render_topograph_ascii(f, args.depth);
  } else {
    throw CLI::ValidationError("render format must be dot or ascii");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conway topograph invariants of integral binary quadratic forms"};
  app.require_subcommand(1);

  InvariantArgs inv_args;
  auto* inv = app.add_subcommand("invariant", "complete GL2(Z) invariant of A*x^2+H*xy+B*y^2");
  inv->add_option("A", inv_args.a)->required();
  inv->add_option("H", inv_args.h)->required();
  inv->add_option("B", inv_args.b)->required();

  CompareArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "decide GL2(Z) isomorphism of two forms");
  cmp->add_option("A0", cmp_args.a0)->required();
  cmp->add_option("H0", cmp_args.h0)->required();
  cmp->add_option("B0", cmp_args.b0)->required();
  cmp->add_option("A1", cmp_args.a1)->required();
  cmp->add_option("H1", cmp_args.h1)->required();
  cmp->add_option("B1", cmp_args.b1)->required();

  SeifertArgs sei_args;
  auto* sei = app.add_subcommand("seifert", "Seifert matrices, forms and predicates of (p,q,k,n)");
  sei->add_option("p", sei_args.p)->required();
  sei->add_option("q", sei_args.q)->required();
  sei->add_option("k", sei_args.k)->required();
  sei->add_option("n", sei_args.n)->required();

  ScanArgs scan_args;
  auto* sc = app.add_subcommand("scan", "scan the (k,n) grid of comparison outcomes");
  sc->add_option("p", scan_args.p)->required();
  sc->add_option("q", scan_args.q)->required();
  sc->add_option("--size", scan_args.size, "half-width S: the grid is [-S,S]x[-S,S]");
  sc->add_option("--out", scan_args.out, "output file (stdout when omitted)");
  sc->add_option("--format", scan_args.format)->check(CLI::IsMember({"csv", "ppm", "ascii", "svg"}));
  sc->add_option("--cache", scan_args.cache, "orbit cache file to resume from and update");
  sc->add_option("--jobs", scan_args.jobs, "worker threads");
  sc->add_flag("--two-sided", scan_args.two_sided, "also compare Q0 against -Q1");
  sc->add_option("--split", scan_args.split,
                 "emit only cells of one topograph type (WELL, RIVER, LAKE, WEIR, LAKEPAIR, ZERO)");

  RenderArgs ren_args;
  auto* ren = app.add_subcommand("render", "local topograph as DOT or ASCII");
  ren->add_option("A", ren_args.a)->required();
  ren->add_option("H", ren_args.h)->required();
  ren->add_option("B", ren_args.b)->required();
  ren->add_option("--depth", ren_args.depth, "edge layers to expand");
  ren->add_option("--format", ren_args.format)->check(CLI::IsMember({"dot", "ascii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (inv->parsed()) return run_invariant(inv_args);
    if (cmp->parsed()) return run_compare(cmp_args);
    if (sei->parsed()) return run_seifert(sei_args);
    if (sc->parsed()) return run_scan(scan_args);
    if (ren->parsed()) return run_render(ren_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
