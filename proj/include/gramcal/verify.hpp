#ifndef GRAMCAL_VERIFY_HPP
#define GRAMCAL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gramcal/indicator.hpp"

namespace gramcal {

inline constexpr size_t kDefaultCellCap = 12;

// One feasible sign vector of the hyperplane arrangement plus an exact
// representative point; indicator sums are constant on the cell.
struct Cell {
  std::vector<int> signs;  // -1 / 0 / +1 per hyperplane
  Vec rep;
};

struct CellDecomposition {
  int dim = 0;
  std::vector<AffineForm> hyperplanes;  // canonical, deduplicated, sorted
  std::vector<Cell> cells;              // sorted by sign vector

  // True when every nontrivial constraint hyperplane of the sum is listed.
  bool covers(const FormalSum& s) const;
};

// Canonical deduplicated hyperplanes of all constraints of all terms.
std::vector<AffineForm> collect_hyperplanes(const std::vector<const FormalSum*>& sums);

CellDecomposition arrangement_cells(const std::vector<AffineForm>& forms, int dim,
                                    size_t cell_cap = kDefaultCellCap);

struct CheckOptions {
  size_t cell_cap = kDefaultCellCap;
  size_t fallback_samples = 0;  // >0 enables random_point_check past the cap
  uint64_t seed = 1;
};

struct CheckWitness {
  Vec point;
  std::vector<int> signs;  // empty in random mode
  Poly lhs_value;
  Poly rhs_value;
};

struct Verdict {
  enum class Kind { equal, unequal, consistent };

  Kind kind = Kind::equal;
  std::string mode;          // "cells" or "random"
  size_t checked = 0;        // cells or trials
  std::optional<CheckWitness> witness;

  bool is_equal() const { return kind == Kind::equal; }
};

std::string to_string(Verdict::Kind kind);

// Exact decision: lhs - rhs evaluated on a representative of every cell of
// the combined arrangement. Falls back to random_point_check when the cap is
// exceeded and options allow it; otherwise throws cell_cap_exceeded.
Verdict identity_check(const FormalSum& lhs, const FormalSum& rhs,
                       const CheckOptions& options = {});

// Same decision on a prebuilt decomposition (hyperplanes must cover both sums).
Verdict identity_check_on(const CellDecomposition& cells, const FormalSum& lhs,
                          const FormalSum& rhs);

// Heuristic sampling fallback: generic points, points on one hyperplane and
// on hyperplane pairs. Deterministic per seed; "consistent" is not a proof.
Verdict random_point_check(const FormalSum& lhs, const FormalSum& rhs, size_t trials,
                           uint64_t seed);

}  // namespace gramcal

#endif
