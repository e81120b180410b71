// cubetess: build, check and analyze cube tessellations with exact rationals.
//
// Exit codes: 0 clean / positive verdict, 1 negative verdict, 2 usage or IO error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cubetess/error.hpp"
#include "cubetess/generators.hpp"
#include "cubetess/search.hpp"
#include "cubetess/stab_analysis.hpp"
#include "cubetess/tess_io.hpp"
#include "cubetess/validator.hpp"

namespace fs = std::filesystem;
using namespace cubetess;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + out_path);
  out << text;
}

std::string kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::OutOfBounds: return "OUT_OF_BOUNDS";
    case ViolationKind::Overlap: return "OVERLAP";
    case ViolationKind::VolumeMismatch: return "VOLUME_MISMATCH";
  }
  return "?";
}

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (const Rational& x : xs) s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

template <typename T>
std::string join_ints(const std::vector<T>& xs) {
  std::string s;
  for (const T& x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_validate(const std::string& file) {
  Tessellation t = read_tess_file(file);
  ValidationReport r = validate(t);
  std::cout << "n " << t.size() << "\nd " << t.dim() << "\ntarget " << t.target() << "\n"
            << "volume_target " << r.volume_target << "\nvolume_sum " << r.volume_sum << "\n";
  for (const Violation& v : r.violations) {
    std::cout << "violation " << kind_name(v.kind);
    for (std::size_t i : v.cubes) std::cout << " " << i;
    std::cout << "\n";
  }
  std::cout << "valid " << yes_no(r.is_valid) << "\n";
  return r.is_valid ? kOk : kNegative;
}

int run_analyze(const std::string& file) {
  Tessellation t = read_tess_file(file);
  if (!validate(t).is_valid) {
    std::cout << "valid no\n";
    return kNegative;
  }
  StabilityReport s = stability_oracle(t);
  std::cout << "valid yes\n"
            << "n " << s.n << "\nd " << s.d << "\ns_max " << s.s_max << "\n"
            << "hypothesis " << yes_no(s.hypothesis_holds) << "\n";
  if (s.offending_side) std::cout << "offending_side " << *s.offending_side << "\n";
  std::cout << "perfect_power " << yes_no(s.n_is_perfect_power) << "\n";
  if (s.root_m) std::cout << "root_m " << *s.root_m << "\n";
  std::cout << "all_sides_equal " << yes_no(s.all_sides_equal) << "\n";

  Tessellation u = normalized(t);
  std::cout << "normalized_target " << u.target() << "\n"
            << "claim2 " << yes_no(claim2_check(u)) << "\n";
  Claim3Report c3 = claim3_report(t);
  std::cout << "claim3 " << yes_no(c3.holds) << " (expected m " << c3.expected_m << ", lines "
            << c3.lines_checked << ", coverage " << c3.coverage << ")\n";
  if (c3.witness_line) {
    std::cout << "claim3_witness axis " << c3.witness_line->axis + 1 << " at " << join(c3.witness_line->fixed_coords)
              << " stabs " << c3.witness_profile->m() << "\n";
  }
  if (s.hypothesis_holds) {
    MeanIdentityResult mi = mean_identity_check(t);
    std::cout << "sum_sides " << mi.sum_sides << "\nline_identity " << yes_no(mi.holds_line_identity)
              << "\npower_mean_equality " << yes_no(mi.power_mean_equality) << "\n";
  }
  return kOk;
}

int run_stab(const std::string& file, int axis, const std::vector<std::string>& at) {
  Tessellation t = read_tess_file(file);
  if (axis < 1 || axis > t.dim()) throw CLI::ValidationError("--axis", "must lie in [1, d]");
  LineSpec line = pick_generic_line(t, axis - 1);
  if (!at.empty()) {
    if (at.size() != static_cast<std::size_t>(t.dim() - 1)) {
      throw CLI::ValidationError("--at", "needs d-1 coordinates");
    }
    line.fixed_coords.clear();
    for (const std::string& s : at) line.fixed_coords.push_back(Rational::parse(s));
  }
  try {
    StabProfile p = stab_profile(t, line);
    std::cout << "axis " << axis << "\nfixed " << join(line.fixed_coords) << "\nm " << p.m() << "\n"
              << "breakpoints " << join(p.breakpoints) << "\ncubes " << join_ints(p.cube_indices) << "\n";
    return kOk;
  } catch (const Error& e) {
    if (e.code() != Errc::NonGenericLine) throw;
    std::cerr << e.what() << "\n";
    return kNegative;
  }
}

int run_peps(const std::string& file) {
  Tessellation t = read_tess_file(file);
  try {
    PepsResult r = build_peps(t);
    std::cout << "epsilon " << r.epsilon << "\nm " << r.m << "\npoints " << r.points.size() << "\n";
    for (std::size_t i = 0; i < r.assignment.size(); ++i) {
      std::cout << "cube " << i << " -> " << join_ints(r.assignment[i]) << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    if (e.code() != Errc::PreconditionFailed && e.code() != Errc::NoEpsilonFound) throw;
    std::cerr << e.what() << "\n";
    return kNegative;
  }
}

struct SearchArgs {
  int d = 2;
  int L = 1;
  std::optional<int> n;
  std::optional<int> n_max;
  int side_min = 1;
  std::optional<int> side_max;
  std::optional<std::size_t> limit;
  std::uint64_t node_limit = 100'000'000;
  unsigned threads = 0;
  std::string out_dir;
  bool feasible = false;
  bool print = false;
};

int run_search(const SearchArgs& a) {
  const unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  std::cout << "# bounded oracle: lattice scale" << (a.feasible ? "s 1.." : " ") << a.L
            << " only; an empty result does not rule out finer decompositions\n";
  if (a.feasible) {
    if (!a.n_max) throw CLI::ValidationError("--feasible", "needs --n-max");
    FeasibleCounts fc = feasible_counts(a.d, a.L, *a.n_max, a.node_limit, threads);
    for (const auto& [scale, counts] : fc.by_scale) {
      std::cout << "scale " << scale << ": " << join_ints(std::vector<int>(counts.begin(), counts.end())) << "\n";
    }
    std::cout << "feasible " << join_ints(std::vector<int>(fc.counts.begin(), fc.counts.end())) << "\n"
              << "exhausted " << yes_no(fc.exhausted) << "\n";
    return fc.counts.empty() ? kNegative : kOk;
  }
  SearchConfig cfg;
  cfg.d = a.d;
  cfg.L = a.L;
  cfg.n = a.n;
  cfg.n_max = a.n_max;
  cfg.side_min = a.side_min;
  cfg.side_max = a.side_max;
  if (a.limit) cfg.tiling_limit = *a.limit;
  cfg.node_limit = a.node_limit;
  cfg.threads = threads;
  SearchOutcome out = search_tilings(cfg);
  std::cout << "tilings " << out.tilings.size() << "\nexhausted " << yes_no(out.exhausted) << "\nnodes "
            << out.nodes_visited << "\n";
  if (!a.out_dir.empty()) fs::create_directories(a.out_dir);
  for (std::size_t i = 0; i < out.tilings.size(); ++i) {
    if (a.print) std::cout << serialize(out.tilings[i]);
    if (!a.out_dir.empty()) {
      std::ostringstream name;
      name << "tiling_" << std::setw(5) << std::setfill('0') << i << ".tess";
      write_tess_file(fs::path(a.out_dir) / name.str(), out.tilings[i]);
    }
  }
  return out.tilings.empty() ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction, validation and analysis of cube tessellations"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated tessellation");
  gen->require_subcommand(1);
  std::string out_path;
  int d = 2, m = 2, k = 1;
  std::string side_text = "1";
  auto* grid = gen->add_subcommand("grid", "m^d grid of equal cubes");
  grid->add_option("--d", d, "Dimension")->required();
  grid->add_option("--m", m, "Cubes per axis")->required();
  grid->add_option("--side", side_text, "Side length (rational)");
  auto* shell = gen->add_subcommand("shell", "Near-tight shell construction");
  shell->add_option("--d", d, "Dimension")->required();
  shell->add_option("--m", m, "Grid size")->required();
  auto* merged = gen->add_subcommand("merged", "Unit grid with a merged corner block");
  merged->add_option("--d", d, "Dimension")->required();
  merged->add_option("--m", m, "Grid size")->required();
  merged->add_option("--k", k, "Merged block size")->required();
  auto* ref = gen->add_subcommand("refine", "Replace one cube by a scaled copy of another tessellation");
  std::string host_file, inner_file;
  std::size_t index = 0;
  ref->add_option("file", host_file, "Host tessellation")->required()->check(CLI::ExistingFile);
  ref->add_option("--index", index, "Cube index to replace")->required();
  ref->add_option("--inner", inner_file, "Inner tessellation")->required()->check(CLI::ExistingFile);
  for (auto* sub : {grid, shell, merged, ref}) sub->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string file;
  auto* val = app.add_subcommand("validate", "Check that a file is a genuine decomposition");
  val->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* ana = app.add_subcommand("analyze", "Stability verdict, claims and mean identity");
  ana->add_option("file", file)->required()->check(CLI::ExistingFile);

  int axis = 1;
  std::vector<std::string> at;
  auto* stab = app.add_subcommand("stab", "Stab profile of a generic axis-parallel line");
  stab->add_option("file", file)->required()->check(CLI::ExistingFile);
  stab->add_option("--axis", axis, "Stab axis, 1-based")->required();
  stab->add_option("--at", at, "Fixed coordinates on the other axes (default: a generic choice)");

  auto* peps = app.add_subcommand("peps", "Cube-to-grid-point bijection");
  peps->add_option("file", file)->required()->check(CLI::ExistingFile);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive lattice tiling search");
  search->add_option("--d", sa.d, "Dimension")->required();
  search->add_option("--L", sa.L, "Lattice units per side")->required();
  search->add_option("--n", sa.n, "Exact piece count");
  search->add_option("--n-max", sa.n_max, "Piece count cap");
  search->add_option("--side-min", sa.side_min, "Smallest side (lattice units)");
  search->add_option("--side-max", sa.side_max, "Largest side (lattice units)");
  search->add_option("--limit", sa.limit, "Maximum tilings to report");
  search->add_option("--node-limit", sa.node_limit, "Maximum search nodes");
  search->add_option("--threads", sa.threads, "Worker threads (0 = hardware)");
  search->add_option("--out-dir", sa.out_dir, "Write each tiling as a .tess file");
  search->add_flag("--feasible", sa.feasible, "Report feasible piece counts up to --n-max over scales 1..L");
  search->add_flag("--print", sa.print, "Print each tiling to stdout");

  auto* render = app.add_subcommand("render", "Render a planar tessellation as SVG");
  render->add_option("file", file)->required()->check(CLI::ExistingFile);
  render->add_option("-o,--output", out_path, "Output SVG (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      std::optional<Tessellation> t;
      if (*grid) t = perfect_grid(d, m, Rational::parse(side_text));
      if (*shell) t = shell_construction(d, m);
      if (*merged) t = merged_block_grid(d, m, k);
      if (*ref) t = refine(read_tess_file(host_file), index, read_tess_file(inner_file));
      emit(serialize(*t), out_path);
      return kOk;
    }
    if (*val) return run_validate(file);
    if (*ana) return run_analyze(file);
    if (*stab) return run_stab(file, axis, at);
    if (*peps) return run_peps(file);
    if (*search) return run_search(sa);
    if (*render) {
      emit(render_svg(read_tess_file(file)), out_path);
      return kOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Errc::InvalidInput && *render ? kNegative : kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
