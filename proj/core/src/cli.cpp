#include "c3m/cli.hpp"

#include <array>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "c3m/base.hpp"
#include "c3m/census.hpp"
#include "c3m/complexity.hpp"
#include "c3m/gl2.hpp"
#include "c3m/parse.hpp"

namespace c3m {

namespace {

// Row order of the census table; matches geometry_column.
constexpr std::array<Geometry, 8> kColumns = {
    Geometry::lens, Geometry::elliptic, Geometry::flat, Geometry::nil,
    Geometry::h2xr, Geometry::sl2,      Geometry::sol,  Geometry::hyperbolic};

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

void run_pq(Int p, Int q, std::ostream& out) {
  out << pq_complexity(p, q) << "\n";
}

void run_norm(const std::string& text, bool conj, std::ostream& out) {
  GL2Mat a = parse_mat(text);
  out << (conj ? conj_norm(a) : norm(a)) << "\n";
  out << "decomposition: " << decomposition_to_string(decompose(a)) << "\n";
}

void run_cn(const std::string& spec, Int orbit_cap, std::ostream& out) {
  ManifoldDescriptor d = parse_descriptor(spec);
  ComplexityProfile pr =
      orbit_cap > 0 ? profile(d, orbit_cap, 2 * orbit_cap) : profile(d);
  out << "descriptor: " << descriptor_to_string(d) << "\n";
  out << pr.to_string() << "\n";
  out << "homology: "
      << homology_invariants_to_string(descriptor_homology(d)) << "\n";
  for (const std::string& n : pr.notes) out << "note: " << n << "\n";
}

struct CensusArgs {
  Int cmax = 9;
  std::string format = "table";
  std::string geometry;  // empty keeps every row
  Int orbit_cap = 0;     // 0 keeps the library default
  Int shards = 1;
};

Geometry geometry_from_tag(const std::string& tag) {
  for (Geometry g : kColumns)
    if (geometry_to_string(g) == tag) return g;
  throw parse_error("unknown geometry '" + tag + "'");
}

void run_census(const CensusArgs& args, std::ostream& out, std::ostream& err) {
  CensusOptions opt;
  if (args.orbit_cap > 0) {
    opt.orbit_height_cap = args.orbit_cap;
    opt.orbit_node_cap = 25 * args.orbit_cap;
  }
  opt.shards = args.shards;
  CensusReport rep = full_census(args.cmax, opt);

  const bool filtered = !args.geometry.empty();
  const Geometry only =
      filtered ? geometry_from_tag(args.geometry) : Geometry::lens;
  auto keep = [&](Geometry g) { return !filtered || g == only; };

  if (args.format == "table") {
    const std::size_t label_w = 10;  // fits "hyperbolic"
    const std::size_t cell_w = 5;
    out << pad_right("geometry", label_w);
    for (Int c = 0; c <= args.cmax; ++c)
      out << pad_left(std::to_string(c), cell_w);
    out << "\n";
    for (Geometry g : kColumns) {
      if (!keep(g)) continue;
      out << pad_right(geometry_to_string(g), label_w);
      for (Int c = 0; c <= args.cmax; ++c) {
        Int n = rep.count(c, g);
        out << pad_left(n == 0 ? "." : std::to_string(n), cell_w);
      }
      out << "\n";
    }
    if (!filtered) {
      out << pad_right("total", label_w);
      for (Int c = 0; c <= args.cmax; ++c)
        out << pad_left(std::to_string(rep.total(c)), cell_w);
      out << "\n";
    }
    for (const std::string& c : rep.caveats) out << "# caveat: " << c << "\n";
  } else if (args.format == "csv") {
    out << "complexity,geometry,count\n";
    for (const CensusRow& row : rep.rows) {
      if (!keep(row.geometry)) continue;
      out << row.complexity << "," << geometry_to_string(row.geometry) << ","
          << row.count() << "\n";
    }
    for (const std::string& c : rep.caveats) out << "# caveat: " << c << "\n";
  } else {
    // jsonl: one object per manifold on stdout; caveats go to stderr so
    // a pipe still reads pure JSON lines.
    for (const CensusRow& row : rep.rows) {
      if (!keep(row.geometry)) continue;
      for (const ManifoldDescriptor& d : row.manifolds) {
        out << "{\"complexity\": " << row.complexity << ", \"geometry\": \""
            << geometry_to_string(row.geometry) << "\", \"descriptor\": \""
            << json_escape(descriptor_to_string(d)) << "\", \"homology\": \""
            << json_escape(
                   homology_invariants_to_string(descriptor_homology(d)))
            << "\"}\n";
      }
    }
    for (const std::string& c : rep.caveats) err << "# caveat: " << c << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "complexity estimates and census tables for closed geometric "
      "3-manifolds"};
  app.name("c3m");
  app.require_subcommand(1);

  auto* pq = app.add_subcommand(
      "pq", "norm |p,q| of a slope (put -- before negative values)");
  Int pq_p = 0;
  Int pq_q = 0;
  pq->add_option("p", pq_p, "first coordinate")->required();
  pq->add_option("q", pq_q, "second coordinate")->required();
  pq->callback([&] { run_pq(pq_p, pq_q, out); });

  auto* nm = app.add_subcommand(
      "norm", "norm of a unimodular 2x2 matrix and its normal form");
  std::string nm_text;
  bool nm_conj = false;
  nm->add_option("matrix", nm_text, "matrix, e.g. [[3,-1],[1,0]]")->required();
  nm->add_flag("--conj", nm_conj,
               "conjugation-invariant norm ||A|| instead of |A|");
  nm->callback([&] { run_norm(nm_text, nm_conj, out); });

  auto* cn = app.add_subcommand(
      "cn", "complexity profile c0..c9 and homology of one manifold");
  std::string cn_spec;
  Int cn_cap = 0;
  cn->add_option("descriptor", cn_spec,
                 "s3 | rp3 | lens(p,q) | sfs(BASE;(p,q),...;t) | "
                 "tb[[a,b],[c,d]] | chain(x,y,z)")
      ->required();
  cn->add_option("--orbit-cap", cn_cap,
                 "height cap for filling-relation orbits")
      ->check(CLI::PositiveNumber);
  cn->callback([&] { run_cn(cn_spec, cn_cap, out); });

  auto* cs = app.add_subcommand(
      "census", "census of closed geometric manifolds by complexity");
  CensusArgs ca;
  cs->add_option("--cmax", ca.cmax, "largest complexity level (0..9)")
      ->capture_default_str();
  cs->add_option("--format", ca.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}))
      ->capture_default_str();
  cs->add_option("--geometry", ca.geometry, "restrict to one geometry row")
      ->check(CLI::IsMember({"lens", "elliptic", "flat", "nil", "h2xr", "sl2",
                             "sol", "hyperbolic"}));
  cs->add_option("--orbit-cap", ca.orbit_cap,
                 "height cap for filling-relation orbits")
      ->check(CLI::PositiveNumber);
  cs->add_option("--shards", ca.shards,
                 "worker threads; the output does not depend on it")
      ->check(CLI::PositiveNumber);
  cs->callback([&] { run_census(ca, out, err); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  if (argc > 1) args.assign(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace c3m
