#ifndef GRAMCAL_COMMANDS_HPP
#define GRAMCAL_COMMANDS_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "gramcal/decomp.hpp"
#include "gramcal/polytope_io.hpp"

namespace gramcal::cli {

struct DecomposeOptions {
  std::string mode = "bg";  // bg | faces | brion | polar
  std::optional<Vec> xi;
  size_t cell_cap = kDefaultCellCap;
  size_t fallback_samples = 0;
  uint64_t seed = 1;
  std::string mutate = "none";  // none | flip-sign | bump-weight | shift-offset
};

struct CommandOutcome {
  int exit_code = 0;  // 0 verified, 1 verification failure (2 = input error, via exception)
  nlohmann::json report;
  std::string text;  // one-line human summary
};

CommandOutcome cmd_decompose(const std::string& path, const DecomposeOptions& options);

// box_spec: "a1:b1,a2:b2,..." with rational bounds per axis.
CommandOutcome cmd_lattice_sum(const std::string& path, const std::string& box_spec);

CommandOutcome cmd_render_svg(const std::string& path, const std::string& mode,
                              const std::optional<Vec>& xi, const std::string& out_path);

CommandOutcome cmd_info(const std::string& path);

// Rebuilds the verified identity from a decompose report: terms vs 1^w_P.
Verdict reverify_report(const nlohmann::json& report);

Vec parse_xi(const std::string& csv, int dim);

}  // namespace gramcal::cli

#endif
