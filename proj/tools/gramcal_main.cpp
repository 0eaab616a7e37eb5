#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "gramcal/commands.hpp"
#include "gramcal/errors.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"gramcal - weighted Brianchon-Gram, Brion and polar decompositions "
               "of polytopes, verified exactly"};
  app.require_subcommand(1);

  std::string file;
  std::string mode = "bg";
  std::string xi_csv;
  std::string out_path;
  std::string box_spec;
  std::string mutate = "none";
  size_t fallback_samples = 0;
  size_t cell_cap = gramcal::kDefaultCellCap;
  uint64_t seed = 1;

  CLI::App* decompose = app.add_subcommand("decompose", "decompose and verify a polytope");
  decompose->add_option("file", file, "polytope file")->required();
  decompose->add_option("--mode", mode, "bg | faces | brion | polar")
      ->check(CLI::IsMember({"bg", "faces", "brion", "polar"}));
  decompose->add_option("--xi", xi_csv, "polarizing covector, comma-separated rationals");
  decompose->add_option("--out", out_path, "write the JSON report here");
  decompose->add_option("--fallback-samples", fallback_samples,
                        "random samples when the cell cap is exceeded");
  decompose->add_option("--seed", seed, "seed for the random fallback");
  decompose->add_option("--cell-cap", cell_cap, "hyperplane cap for exact cell mode");
  decompose->add_option("--mutate", mutate,
                        "fault injection: none | flip-sign | bump-weight | shift-offset");

  CLI::App* lattice = app.add_subcommand("lattice-sum", "weighted lattice-point sum over a box");
  lattice->add_option("file", file, "polytope file")->required();
  lattice->add_option("--box", box_spec, "per-axis bounds a1:b1,a2:b2,...")->required();

  CLI::App* render = app.add_subcommand("render", "draw decomposition panels as SVG");
  render->add_option("file", file, "polytope file")->required();
  render->add_option("--mode", mode, "bg | faces | brion | polar")
      ->check(CLI::IsMember({"bg", "faces", "brion", "polar"}));
  render->add_option("--xi", xi_csv, "polarizing covector for polar mode");
  render->add_option("--out", out_path, "output SVG path")->required();

  CLI::App* info = app.add_subcommand("info", "faces, genericity class and V_ns of a polytope");
  info->add_option("file", file, "polytope file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gramcal::cli::CommandOutcome outcome;
  if (decompose->parsed()) {
    gramcal::cli::DecomposeOptions options;
    options.mode = mode;
    options.fallback_samples = fallback_samples;
    options.seed = seed;
    options.cell_cap = cell_cap;
    options.mutate = mutate;
    if (!xi_csv.empty()) {
      const auto parsed = gramcal::parse_polytope_file(file);
      options.xi = gramcal::cli::parse_xi(xi_csv, parsed.dim);
    }
    outcome = gramcal::cli::cmd_decompose(file, options);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw gramcal::input_error("cannot write '" + out_path + "'");
      out << outcome.report.dump(2) << "\n";
    }
    std::cout << outcome.report.dump(2) << "\n";
  } else if (lattice->parsed()) {
    outcome = gramcal::cli::cmd_lattice_sum(file, box_spec);
    std::cout << outcome.text << "\n";
  } else if (render->parsed()) {
    std::optional<gramcal::Vec> xi;
    if (!xi_csv.empty()) {
      const auto parsed = gramcal::parse_polytope_file(file);
      xi = gramcal::cli::parse_xi(xi_csv, parsed.dim);
    }
    outcome = gramcal::cli::cmd_render_svg(file, mode, xi, out_path);
    std::cout << outcome.text << "\n";
  } else if (info->parsed()) {
    outcome = gramcal::cli::cmd_info(file);
    std::cout << outcome.text << "\n";
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gramcal::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gramcal::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
