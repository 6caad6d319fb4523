// kount — counting matrices of simplicial and discrete CW complexes.
//
// Subcommands: gen, matrix, verify, spectrum, zeta, ring.  Exit codes:
// 0 success / all checks pass, 1 theorem-check or internal exactness
// failure, 2 input error.

#include "kount/constructions.hpp"
#include "kount/cw.hpp"
#include "kount/exact.hpp"
#include "kount/io.hpp"
#include "kount/matrices.hpp"
#include "kount/ring.hpp"
#include "kount/spectra.hpp"
#include "kount/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace kount;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Source {
  std::string in_path;
  int star = 0, cycle = 0, complete = 0;
  int cross_polytope = -1;
  std::vector<int> random;  // n m
  std::uint64_t seed = 1;
  std::string whitney_path;
  std::string generators;  // "1,2,3;3,4"
  std::string suspend_path, barycentric_path;
  std::string attach_all_path, attach_path;
  std::string attach_ids;  // "1,2,3"

  void add_options(CLI::App* cmd) {
    auto* grp = cmd->add_option_group("source", "complex source (pick one)");
    grp->add_option("--in", in_path, "complex or CW JSON file");
    grp->add_option("--star", star, "star complex with K spikes");
    grp->add_option("--cycle", cycle, "Whitney complex of the cycle graph C_N");
    grp->add_option("--complete", complete, "complete complex on N vertices");
    grp->add_option("--cross-polytope", cross_polytope,
                    "cross polytope boundary of dimension D (D=2: octahedron)");
    grp->add_option("--random", random, "seeded random complex: N M")->expected(2);
    grp->add_option("--whitney", whitney_path, "Whitney complex of a graph JSON file");
    grp->add_option("--generators", generators, "inline generators, e.g. \"1,2,3;3,4\"");
    grp->add_option("--suspend", suspend_path, "suspension of the complex in FILE");
    grp->add_option("--barycentric", barycentric_path, "barycentric refinement of FILE");
    grp->add_option("--attach-all", attach_all_path,
                    "CW complex: attach one cell to every cell of FILE");
    grp->add_option("--attach", attach_path, "CW complex: attach one cell to FILE");
    grp->require_option(1);
    cmd->add_option("--seed", seed, "PRNG seed for --random");
    cmd->add_option("--ids", attach_ids, "attachment ids for --attach, e.g. \"1,2,3\"");
  }

  io::AnyComplex resolve() const {
    if (!in_path.empty()) return io::load_complex(in_path);
    if (star > 0) return star_complex(star);
    if (cycle > 0) return cycle_complex(cycle);
    if (complete > 0) return complete_complex(complete);
    if (cross_polytope >= 0) return cross_polytope_complex(cross_polytope);
    if (!random.empty()) return random_complex(random[0], random[1], seed);
    if (!whitney_path.empty())
      return io::graph_from_json(io::parse_json(io::read_file(whitney_path))).whitney();
    if (!generators.empty()) return SimplicialComplex::closure(parse_generators(generators));
    if (!suspend_path.empty()) return suspension(simplicial_file(suspend_path));
    if (!barycentric_path.empty()) return barycentric_refinement(simplicial_file(barycentric_path));
    if (!attach_all_path.empty()) {
      CWComplex cw = cw_file(attach_all_path);
      std::vector<int> ids;
      for (const auto& cell : cw.cells()) ids.push_back(cell.id);
      return cw.attach_cell(ids);
    }
    if (!attach_path.empty()) {
      if (attach_ids.empty()) throw std::invalid_argument("--attach needs --ids");
      return cw_file(attach_path).attach_cell(parse_ids(attach_ids));
    }
    throw std::invalid_argument("no complex source given");
  }

  static std::vector<Simplex> parse_generators(const std::string& text) {
    std::vector<Simplex> out;
    std::string group;
    std::istringstream stream(text);
    while (std::getline(stream, group, ';')) {
      std::vector<int> verts;
      std::istringstream gs(group);
      std::string tok;
      while (std::getline(gs, tok, ',')) verts.push_back(std::stoi(tok));
      out.emplace_back(std::move(verts));
    }
    return out;
  }

  static std::vector<int> parse_ids(const std::string& text) {
    std::vector<int> out;
    std::istringstream stream(text);
    std::string tok;
    while (std::getline(stream, tok, ',')) out.push_back(std::stoi(tok));
    return out;
  }

  static SimplicialComplex simplicial_file(const std::string& path) {
    auto any = io::load_complex(path);
    if (auto* sc = std::get_if<SimplicialComplex>(&any)) return *sc;
    throw std::invalid_argument(path + ": operation needs a simplicial complex");
  }

  static CWComplex cw_file(const std::string& path) {
    auto any = io::load_complex(path);
    if (auto* sc = std::get_if<SimplicialComplex>(&any)) return CWComplex::embed(*sc);
    return std::get<CWComplex>(any);
  }
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    io::write_file(out_path, content);
  }
}

std::string fvector_str(const std::vector<std::int64_t>& counts) {
  std::string s = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

int cmd_gen(const Source& src, const std::string& out_path) {
  auto any = src.resolve();
  if (auto* sc = std::get_if<SimplicialComplex>(&any)) {
    const FVector f = sc->f_vector();
    std::cout << "n=" << sc->size() << " f=" << fvector_str(f.counts)
              << " chi=" << sc->euler_characteristic() << "\n";
    if (!out_path.empty()) io::write_file(out_path, io::dump(io::complex_to_json(*sc)));
  } else {
    const CWComplex& cw = std::get<CWComplex>(any);
    const FVector f = cw.f_vector();
    std::cout << "n=" << cw.size() << " f=" << fvector_str(f.counts)
              << " chi=" << f.euler_characteristic() << "\n";
    if (!out_path.empty()) io::write_file(out_path, io::dump(io::cw_to_json(cw)));
  }
  return kExitOk;
}

int cmd_matrix(const Source& src, const std::string& which, const std::string& t_text,
               const std::string& format, const std::string& out_path) {
  auto any = src.resolve();
  const bool simplicial = std::holds_alternative<SimplicialComplex>(any);
  std::vector<std::string> labels;
  std::optional<IntMatrix> im;
  std::optional<RatMatrix> rm;
  if (simplicial) {
    const auto& g = std::get<SimplicialComplex>(any);
    labels = io::simplex_labels(g);
    if (which == "K") im = counting_matrix(g);
    else if (which == "Kinv") im = green_star_inverse(g);
    else if (which == "L") im = connection_matrix(g);
    else if (which == "Linv") im = connection_green_inverse(g);
    else if (which == "Q") im = supercharge(g);
    else if (which == "Lt") rm = parametrized_matrix(g, parse_rat(t_text));
    else if (which == "gt") rm = parametrized_green(g, parse_rat(t_text));
    else throw std::invalid_argument("unknown matrix kind: " + which);
  } else {
    const auto& cw = std::get<CWComplex>(any);
    labels = io::cell_labels(cw);
    if (which == "K") im = counting_matrix(cw);
    else if (which == "Kinv") im = green_star_inverse(cw);
    else if (which == "Q") im = supercharge(cw);
    else if (which == "L" || which == "Linv" || which == "Lt" || which == "gt")
      throw std::invalid_argument(which + " is only defined for simplicial complexes");
    else throw std::invalid_argument("unknown matrix kind: " + which);
  }
  std::string content;
  if (format == "json")
    content = im ? io::dump(io::matrix_to_json(*im, labels))
                 : io::dump(io::matrix_to_json(*rm, labels));
  else if (format == "csv")
    content = im ? io::matrix_to_csv(*im) : io::matrix_to_csv(*rm);
  else
    throw std::invalid_argument("unknown format: " + format);
  emit(out_path, content);
  return kExitOk;
}

int cmd_verify(const Source& src, int samples, std::uint64_t seed, double tol_scale,
               bool as_json) {
  VerifyOptions opt;
  opt.functional_samples = samples;
  opt.seed = seed;
  if (tol_scale > 0) opt.functional_tol_per_n = tol_scale;
  auto any = src.resolve();
  const VerifyReport report = std::holds_alternative<SimplicialComplex>(any)
                                  ? run_verify(std::get<SimplicialComplex>(any), opt)
                                  : run_verify(std::get<CWComplex>(any), opt);
  if (as_json) {
    io::json checks = io::json::array();
    for (const CheckResult& c : report.checks) {
      io::json j{{"name", c.name}, {"pass", c.pass}, {"exact", c.exact}, {"seconds", c.seconds}};
      if (!c.exact) {
        j["residual"] = c.residual;
        j["tolerance"] = c.tolerance;
      }
      if (!c.note.empty()) j["note"] = c.note;
      checks.push_back(std::move(j));
    }
    std::cout << io::dump(io::json{{"n", report.n},
                                   {"f_vector", report.f_vector},
                                   {"chi", report.euler_characteristic},
                                   {"pass", report.all_pass()},
                                   {"checks", checks}});
  } else {
    std::cout << "n=" << report.n << " f=" << fvector_str(report.f_vector)
              << " chi=" << report.euler_characteristic << "\n";
    for (const CheckResult& c : report.checks) {
      std::printf("%-22s %s", c.name.c_str(), c.pass ? "PASS" : "FAIL");
      if (!c.exact) std::printf("  residual %.3g (tol %.3g)", c.residual, c.tolerance);
      if (!c.note.empty()) std::printf("  [%s]", c.note.c_str());
      std::printf("  (%.3fs)\n", c.seconds);
    }
  }
  if (report.all_pass()) return kExitOk;
  if (!as_json) std::cout << "first failing check: " << report.first_failure()->name << "\n";
  return kExitCheckFailed;
}

int cmd_spectrum(const Source& src, const std::string& out_path) {
  auto any = src.resolve();
  const IntMatrix k = std::holds_alternative<SimplicialComplex>(any)
                          ? counting_matrix(std::get<SimplicialComplex>(any))
                          : counting_matrix(std::get<CWComplex>(any));
  emit(out_path, io::dump(io::spectrum_to_json(eigenvalues_sym(k))));
  return kExitOk;
}

int cmd_zeta(const Source& src, double re_min, double re_max, double im_min, double im_max,
             double step, const std::string& out_path) {
  auto any = src.resolve();
  const IntMatrix k = std::holds_alternative<SimplicialComplex>(any)
                          ? counting_matrix(std::get<SimplicialComplex>(any))
                          : counting_matrix(std::get<CWComplex>(any));
  const ZetaGrid grid = zeta_grid(eigenvalues_sym(k), re_min, re_max, im_min, im_max, step);
  emit(out_path, io::zeta_grid_to_csv(grid));
  return kExitOk;
}

int cmd_ring(const std::string& op, const std::string& a_path, const std::string& b_path,
             const std::string& out_path) {
  const SimplicialComplex a = Source::simplicial_file(a_path);
  const SimplicialComplex b = Source::simplicial_file(b_path);
  if (op == "sum") {
    const SimplicialComplex u = disjoint_union(a, b);
    std::cout << "n=" << u.size() << "\n";
    if (!out_path.empty()) io::write_file(out_path, io::dump(io::complex_to_json(u)));
    return kExitOk;
  }
  if (op == "kron") {
    emit(out_path, io::dump(io::matrix_to_json(kronecker(counting_matrix(a), counting_matrix(b)))));
    return kExitOk;
  }
  if (op == "product" || op == "check") {
    const auto reports = representation_check(a, b);
    emit(out_path, io::dump(io::ring_reports_to_json(reports)));
    return kExitOk;
  }
  throw std::invalid_argument("unknown ring op: " + op);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counting matrices of simplicial and CW complexes"};
  app.require_subcommand(1);

  Source src;
  std::string out_path, which = "K", t_text = "1", format = "json", ring_op = "check";
  std::string ring_a, ring_b;
  int samples = 100;
  std::uint64_t verify_seed = 7;
  double tol_scale = 0.0;
  bool as_json = false;
  double re_min = -4.0, re_max = 4.0, im_min = 0.0, im_max = 30.0, step = 0.05;

  auto* gen = app.add_subcommand("gen", "construct a complex and write it as JSON");
  src.add_options(gen);
  gen->add_option("--out", out_path, "output path (omit to print only the summary)");

  auto* matrix = app.add_subcommand("matrix", "emit K, L, Kinv, Linv, Lt, gt or Q");
  src.add_options(matrix);
  matrix->add_option("--which", which, "K | L | Kinv | Linv | Lt | gt | Q")->required();
  matrix->add_option("--t", t_text, "parameter for Lt/gt as p/q");
  matrix->add_option("--format", format, "json | csv");
  matrix->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the full theorem suite");
  src.add_options(verify);
  verify->add_option("--samples", samples, "functional-equation sample count");
  verify->add_option("--verify-seed", verify_seed, "sampling seed");
  verify->add_option("--tol", tol_scale, "functional-equation tolerance per set");
  verify->add_flag("--json", as_json, "machine-readable report");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of K as JSON");
  src.add_options(spectrum);
  spectrum->add_option("--out", out_path, "output path (default stdout)");

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta grid CSV over a complex rectangle");
  src.add_options(zeta_cmd);
  zeta_cmd->add_option("--re-min", re_min, "default -4");
  zeta_cmd->add_option("--re-max", re_max, "default 4");
  zeta_cmd->add_option("--im-min", im_min, "default 0");
  zeta_cmd->add_option("--im-max", im_max, "default 30");
  zeta_cmd->add_option("--step", step, "default 0.05");
  zeta_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* ring = app.add_subcommand("ring", "direct sum / Kronecker / representation checks");
  ring->add_option("--op", ring_op, "sum | kron | product | check");
  ring->add_option("a", ring_a, "first complex file")->required();
  ring->add_option("b", ring_b, "second complex file")->required();
  ring->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (gen->parsed()) return cmd_gen(src, out_path);
    if (matrix->parsed()) return cmd_matrix(src, which, t_text, format, out_path);
    if (verify->parsed()) return cmd_verify(src, samples, verify_seed, tol_scale, as_json);
    if (spectrum->parsed()) return cmd_spectrum(src, out_path);
    if (zeta_cmd->parsed()) return cmd_zeta(src, re_min, re_max, im_min, im_max, step, out_path);
    if (ring->parsed()) return cmd_ring(ring_op, ring_a, ring_b, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}
