// simplewedge: analyze point configurations for simple lines and simple
// wedges.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input or usage,
// 3 conjecture counterexample found.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "simplewedge/conjecture.hpp"
#include "simplewedge/constructions.hpp"
#include "simplewedge/errors.hpp"
#include "simplewedge/io.hpp"
#include "simplewedge/orbit.hpp"
#include "simplewedge/report.hpp"
#include "simplewedge/svg.hpp"
#include "simplewedge/wedge.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

using namespace swedge;

Configuration load(const std::string& path) { return build_configuration(read_points_file(path)); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

void print_certificate(const WedgeCertificate& w) {
  std::cout << "apex " << w.apex << " arms " << w.arm1 << ", " << w.arm2 << " lines " << w.key1
            << ' ' << w.key2 << '\n';
}

int run_analyze(const std::string& file, bool as_json, const std::string& svg_out) {
  Configuration config = load(file);
  AnalysisReport report = analyze(config);
  std::cout << (as_json ? report_to_json(report) + "\n" : report_to_text(report));
  if (!svg_out.empty()) write_file(svg_out, render_svg(config, report));
  return 0;
}

int run_wedges(const std::string& file, const std::string& method) {
  Configuration config = load(file);
  if (method == "brute") {
    auto wedges = brute_force_wedges(config);
    std::cout << wedges.size() << " simple wedges\n";
    for (const auto& w : wedges) print_certificate(w);
    return 0;
  }
  if (!is_ell_bounded(config, 3)) {
    throw UsageError("orbit method requires a 3-bounded configuration");
  }
  for (const auto& line : simple_lines(config)) {
    BaseLine base = make_base_line(config, line.endpoints.first, line.endpoints.second);
    std::cout << "line " << line.key << " [" << base.a << ' ' << base.b << "]: ";
    if (auto w = find_wedge_from_line(config, base)) {
      print_certificate(*w);
    } else {
      std::cout << "no wedge\n";
    }
  }
  return 0;
}

int run_orbit(const std::string& file, std::size_t a, std::size_t b, std::size_t start) {
  Configuration config = load(file);
  if (!is_ell_bounded(config, 3)) {
    throw UsageError("orbits require a 3-bounded configuration");
  }
  BaseLine base = make_base_line(config, a, b);
  std::cout << render_trace(config, maximal_orbit(config, base, start));
  return 0;
}

int run_generate(const ConstructionSpec& spec, const std::string& out_path) {
  std::string text = write_points(generate(spec).points());
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int run_conjecture(const ConjectureOptions& options, const std::string& out_dir) {
  ConjectureSummary summary = conjecture_search(options);
  std::cout << "n=" << options.n << " scanned " << summary.scanned << " collinear-rejected "
            << summary.rejected << " failures " << summary.failures.size() << '\n';
  if (summary.failures.empty()) return 0;
  std::filesystem::create_directories(out_dir);
  for (const auto& f : summary.failures) {
    auto path = std::filesystem::path(out_dir) /
                ("counterexample-n" + std::to_string(f.n) + "-seed" + std::to_string(f.seed) +
                 "-trial" + std::to_string(f.trial) + ".pts");
    write_file(path.string(), write_points(f.points));
    std::cout << "counterexample written to " << path.string() << '\n';
  }
  return kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple lines and simple wedges of planar point configurations"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  std::string svg_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report spanned lines, simple lines and wedges");
  analyze_cmd->add_option("FILE", file, "Point file")->required();
  analyze_cmd->add_flag("--json", as_json, "Emit the report as JSON");
  analyze_cmd->add_option("--svg", svg_out, "Also write an SVG drawing");

  std::string method = "brute";
  auto* wedges_cmd = app.add_subcommand("wedges", "List simple wedges");
  wedges_cmd->add_option("FILE", file, "Point file")->required();
  wedges_cmd->add_option("--method", method, "orbit (3-bounded only) or brute")
      ->check(CLI::IsMember({"orbit", "brute"}));

  std::size_t a = 0, b = 0, start = 0;
  auto* orbit_cmd = app.add_subcommand("orbit", "Trace the maximal orbit from a start point");
  orbit_cmd->add_option("FILE", file, "Point file")->required();
  orbit_cmd->add_option("--a", a, "Index of base point a")->required();
  orbit_cmd->add_option("--b", b, "Index of base point b")->required();
  orbit_cmd->add_option("--start", start, "Index of the first orbit point")->required();

  std::string gen_out;
  ConstructionSpec spec{ConstructionKind::SixPoint, 0};
  auto* generate_cmd = app.add_subcommand("generate", "Emit a construction as a point file");
  generate_cmd->add_option("-o,--output", gen_out, "Output file (default stdout)");
  generate_cmd->require_subcommand(1);
  generate_cmd->fallthrough();
  auto* six_cmd = generate_cmd->add_subcommand("six", "3-bounded six-point set without wedges");
  auto* nine_cmd = generate_cmd->add_subcommand("nine", "Nine-point set, L_ab without a wedge");
  auto* closed_cmd = generate_cmd->add_subcommand("closed-orbit", "One closed orbit of length 2k");
  closed_cmd->add_option("--k", spec.parameter, "Half the orbit length (k >= 2)")->required();
  auto* gext_cmd = generate_cmd->add_subcommand("g-ext", "Nine-point set with m mirrored triples");
  gext_cmd->add_option("--m", spec.parameter, "Number of triples (odd)")->required();

  ConjectureOptions conj;
  bool exhaustive = false;
  std::string out_dir = ".";
  auto* conj_cmd = app.add_subcommand("conjecture", "Search for odd sets without a simple wedge");
  conj_cmd->add_option("--n", conj.n, "Number of points (odd)")->required();
  auto* trials_opt = conj_cmd->add_option("--trials", conj.trials, "Random trials");
  conj_cmd->add_option("--seed", conj.seed, "Random seed")->needs(trials_opt);
  conj_cmd->add_option("--range", conj.range, "Coordinates in [-range, range]")->needs(trials_opt);
  auto* exhaustive_flag = conj_cmd->add_flag("--exhaustive", exhaustive, "Enumerate a lattice");
  auto* grid_opt = conj_cmd->add_option("--grid", conj.grid, "Lattice side")->needs(exhaustive_flag);
  exhaustive_flag->needs(grid_opt)->excludes(trials_opt);
  conj_cmd->add_option("--threads", conj.threads, "Worker threads (0: all cores)");
  conj_cmd->add_option("--out-dir", out_dir, "Directory for counterexample files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(file, as_json, svg_out);
    if (*wedges_cmd) return run_wedges(file, method);
    if (*orbit_cmd) return run_orbit(file, a, b, start);
    if (*generate_cmd) {
      if (*nine_cmd) spec.kind = ConstructionKind::NinePoint;
      if (*closed_cmd) spec.kind = ConstructionKind::ClosedOrbit;
      if (*gext_cmd) spec.kind = ConstructionKind::GExtended;
      if (*six_cmd) spec.kind = ConstructionKind::SixPoint;
      return run_generate(spec, gen_out);
    }
    if (*conj_cmd) {
      if (!exhaustive && conj_cmd->count("--trials") == 0) {
        throw UsageError("conjecture needs --trials or --exhaustive --grid");
      }
      conj.mode = exhaustive ? SearchMode::Exhaustive : SearchMode::Random;
      return run_conjecture(conj, out_dir);
    }
  } catch (const LemmaViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
