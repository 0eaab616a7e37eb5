#include "gramcal/fourier_motzkin.hpp"

#include <map>
#include <optional>
#include <utility>

#include "gramcal/errors.hpp"

namespace gramcal {

namespace {

struct Row {
  Vec coeffs;
  Rational offset;
  bool strict = false;
};

// Primitive integer rescaling by a positive factor; keeps the relation.
void normalize_row(Row& row) {
  mpz_class lcm(1);
  for (const auto& c : row.coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row.offset.get_den_mpz_t());
  mpz_class gcd(0);
  auto fold = [&](const Rational& c) {
    mpz_class scaled = c.get_num() * (lcm / c.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
  };
  for (const auto& c : row.coeffs) fold(c);
  fold(row.offset);
  if (gcd == 0) return;
  Rational scale{lcm, gcd};
  scale.canonicalize();
  for (auto& c : row.coeffs) c *= scale;
  row.offset *= scale;
}

// true = satisfied everywhere, false = unsatisfiable, nullopt = not constant.
std::optional<bool> constant_verdict(const Row& row) {
  if (!is_zero_vec(row.coeffs)) return std::nullopt;
  if (row.offset > 0) return true;
  if (row.offset < 0) return false;
  return !row.strict;
}

// Deduplicates rows sharing a primitive normal direction, keeping the
// tightest offset (strict wins ties).
std::vector<Row> tighten(std::vector<Row> rows) {
  std::map<Vec, Row> best;
  for (auto& row : rows) {
    auto it = best.find(row.coeffs);
    if (it == best.end()) {
      best.emplace(row.coeffs, std::move(row));
      continue;
    }
    Row& kept = it->second;
    if (row.offset < kept.offset ||
        (row.offset == kept.offset && row.strict && !kept.strict)) {
      kept = std::move(row);
    }
  }
  std::vector<Row> out;
  out.reserve(best.size());
  for (auto& [key, row] : best) out.push_back(std::move(row));
  return out;
}

constexpr size_t kRowBlowupCap = 200000;

}  // namespace

Feasibility fm_feasible(const std::vector<LinearConstraint>& system, int dim) {
  const size_t n = static_cast<size_t>(dim);
  std::vector<Row> rows;
  std::vector<Row> equalities;
  rows.reserve(system.size());
  for (const auto& c : system) {
    if (c.form.normal.size() != n) throw input_error("fm_feasible: dimension mismatch");
    switch (c.rel) {
      case Rel::ge:
        rows.push_back({c.form.normal, c.form.offset, false});
        break;
      case Rel::gt:
        rows.push_back({c.form.normal, c.form.offset, true});
        break;
      case Rel::eq:
        equalities.push_back({c.form.normal, c.form.offset, false});
        break;
    }
  }

  // Gauss-Jordan on the equalities: each pivot variable is expressed in the
  // remaining free variables, so the inequality phase never sees it.
  std::vector<std::pair<size_t, Row>> pivots;  // (var, row with coeff 1 there)
  std::vector<bool> is_pivot(n, false);
  auto reduce_by_pivots = [&](Row& row) {
    for (const auto& [v, prow] : pivots) {
      const Rational c = row.coeffs[v];
      if (c == 0) continue;
      for (size_t j = 0; j < n; ++j) row.coeffs[j] -= c * prow.coeffs[j];
      row.offset -= c * prow.offset;
    }
  };
  for (Row& erow : equalities) {
    reduce_by_pivots(erow);
    size_t pivot_var = n;
    for (size_t j = 0; j < n; ++j) {
      if (erow.coeffs[j] != 0) {
        pivot_var = j;
        break;
      }
    }
    if (pivot_var == n) {
      if (erow.offset != 0) return {false, {}};
      continue;
    }
    const Rational inv = 1 / erow.coeffs[pivot_var];
    for (auto& c : erow.coeffs) c *= inv;
    erow.offset *= inv;
    // Jordan step: clear the new pivot from the stored pivot rows.
    for (auto& [v, prow] : pivots) {
      const Rational c = prow.coeffs[pivot_var];
      if (c == 0) continue;
      for (size_t j = 0; j < n; ++j) prow.coeffs[j] -= c * erow.coeffs[j];
      prow.offset -= c * erow.offset;
    }
    is_pivot[pivot_var] = true;
    pivots.emplace_back(pivot_var, erow);
  }
  for (auto& row : rows) {
    reduce_by_pivots(row);
    normalize_row(row);
  }

  // levels[k] = rows of the system from which vars_order[k] was eliminated.
  std::vector<std::vector<Row>> levels;
  std::vector<size_t> vars_order;
  std::vector<bool> eliminated = is_pivot;

  auto screen_constants = [](std::vector<Row>& rs) -> bool {
    std::vector<Row> kept;
    kept.reserve(rs.size());
    for (auto& row : rs) {
      const auto verdict = constant_verdict(row);
      if (!verdict.has_value()) {
        kept.push_back(std::move(row));
      } else if (!*verdict) {
        return false;
      }
    }
    rs = std::move(kept);
    return true;
  };

  if (!screen_constants(rows)) return {false, {}};
  rows = tighten(std::move(rows));

  const size_t free_vars = n - pivots.size();
  for (size_t step = 0; step < free_vars; ++step) {
    // Pick the remaining variable with the fewest pairwise combinations.
    size_t best_var = n;
    size_t best_cost = SIZE_MAX;
    for (size_t v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      size_t pos = 0, neg = 0;
      for (const auto& row : rows) {
        if (row.coeffs[v] > 0) ++pos;
        else if (row.coeffs[v] < 0) ++neg;
      }
      const size_t cost = pos * neg;
      if (cost < best_cost) {
        best_cost = cost;
        best_var = v;
      }
    }
    const size_t v = best_var;
    eliminated[v] = true;
    vars_order.push_back(v);
    levels.push_back(rows);

    std::vector<Row> next;
    std::vector<const Row*> pos, neg;
    for (const auto& row : rows) {
      if (row.coeffs[v] > 0) pos.push_back(&row);
      else if (row.coeffs[v] < 0) neg.push_back(&row);
      else next.push_back(row);
    }
    if (pos.size() * neg.size() > kRowBlowupCap) {
      throw unsupported_error("fm_feasible: elimination blowup over cap");
    }
    for (const Row* p : pos) {
      for (const Row* q : neg) {
        const Rational a = p->coeffs[v];
        const Rational b = q->coeffs[v];  // b < 0
        Row derived;
        derived.coeffs.resize(n);
        for (size_t j = 0; j < n; ++j) {
          derived.coeffs[j] = p->coeffs[j] * (-b) + q->coeffs[j] * a;
        }
        derived.offset = p->offset * (-b) + q->offset * a;
        derived.strict = p->strict || q->strict;
        normalize_row(derived);
        next.push_back(std::move(derived));
      }
    }
    if (!screen_constants(next)) return {false, {}};
    rows = tighten(std::move(next));
  }

  // Feasible: rebuild a witness back to front over the free variables, then
  // recover the pivot variables from their solved equality rows.
  Vec witness = zero_vec(dim);
  for (size_t k = vars_order.size(); k-- > 0;) {
    const size_t v = vars_order[k];
    std::optional<std::pair<Rational, bool>> lower, upper;  // (bound, strict)
    for (const auto& row : levels[k]) {
      const Rational& a = row.coeffs[v];
      if (a == 0) continue;
      Rational rest = row.offset;
      for (size_t j = 0; j < n; ++j) {
        if (j != v && row.coeffs[j] != 0) rest += row.coeffs[j] * witness[j];
      }
      const Rational bound = -rest / a;
      if (a > 0) {
        if (!lower || bound > lower->first ||
            (bound == lower->first && row.strict)) {
          lower = {bound, row.strict};
        }
      } else {
        if (!upper || bound < upper->first ||
            (bound == upper->first && row.strict)) {
          upper = {bound, row.strict};
        }
      }
    }
    Rational value(0);
    if (lower && upper) {
      if (lower->first < upper->first) {
        value = (lower->first + upper->first) / 2;
      } else {
        value = lower->first;  // equal bounds, both non-strict
      }
    } else if (lower) {
      value = lower->second ? lower->first + 1 : lower->first;
    } else if (upper) {
      value = upper->second ? upper->first - 1 : upper->first;
    }
    witness[v] = value;
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [v, prow] = *it;
    Rational value = -prow.offset;
    for (size_t j = 0; j < n; ++j) {
      if (j != v && prow.coeffs[j] != 0) value -= prow.coeffs[j] * witness[j];
    }
    witness[v] = value;
  }
  return {true, std::move(witness)};
}

}  // namespace gramcal
