#include "gramcal/linalg.hpp"

#include <sstream>

#include "gramcal/errors.hpp"

namespace gramcal {

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
  Rational total(0);
  for (size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("vec_add: dimension mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("vec_sub: dimension mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec zero_vec(int dim) { return Vec(static_cast<size_t>(dim), Rational(0)); }

std::string to_string(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << to_string(v[i]);
  }
  out << ")";
  return out.str();
}

Rational AffineForm::value_at(const Vec& x) const {
  if (x.size() != normal.size()) throw input_error("value_at: dimension mismatch");
  return dot(normal, x) + offset;
}

AffineForm AffineForm::negated() const {
  AffineForm out;
  out.normal.reserve(normal.size());
  for (const auto& c : normal) out.normal.push_back(-c);
  out.offset = -offset;
  return out;
}

AffineForm form_from(std::initializer_list<long> normal, long offset) {
  AffineForm f;
  for (long c : normal) f.normal.emplace_back(c);
  f.offset = Rational(offset);
  return f;
}

std::string to_string(const AffineForm& f) {
  std::ostringstream out;
  for (size_t i = 0; i < f.normal.size(); ++i) {
    out << to_string(f.normal[i]) << " ";
  }
  out << to_string(f.offset);
  return out.str();
}

AffineForm canonical_halfspace(const AffineForm& f) {
  // Scale by lcm(denominators)/gcd(numerators); sign preserved.
  mpz_class lcm(1);
  for (const auto& c : f.normal) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.offset.get_den_mpz_t());
  mpz_class gcd(0);
  auto fold = [&](const Rational& c) {
    mpz_class scaled = c.get_num() * (lcm / c.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
  };
  for (const auto& c : f.normal) fold(c);
  fold(f.offset);
  if (gcd == 0) return f;  // identically zero form
  Rational scale{lcm, gcd};
  scale.canonicalize();
  AffineForm out;
  out.normal.reserve(f.normal.size());
  for (const auto& c : f.normal) out.normal.push_back(c * scale);
  out.offset = f.offset * scale;
  return out;
}

AffineForm canonical_hyperplane(const AffineForm& f) {
  AffineForm out = canonical_halfspace(f);
  for (const auto& c : out.normal) {
    if (c > 0) return out;
    if (c < 0) return out.negated();
  }
  if (out.offset < 0) return out.negated();
  return out;
}

int rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[pivot_row][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

AffineSolution solve_affine(const std::vector<AffineForm>& equations, int dim) {
  const size_t n = static_cast<size_t>(dim);
  for (const auto& f : equations) {
    if (f.normal.size() != n) throw input_error("solve_affine: dimension mismatch");
  }
  // Augmented rows [normal | -offset] for <normal, x> = -offset.
  std::vector<Vec> rows;
  rows.reserve(equations.size());
  for (const auto& f : equations) {
    Vec row = f.normal;
    row.push_back(-f.offset);
    rows.push_back(std::move(row));
  }

  std::vector<int> pivot_col_of_row;
  size_t pivot_row = 0;
  for (size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    const Rational inv = 1 / rows[pivot_row][col];
    for (size_t c = col; c <= n; ++c) rows[pivot_row][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (size_t c = col; c <= n; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  for (size_t r = pivot_row; r < rows.size(); ++r) {
    if (rows[r][n] != 0) return {SolutionKind::infeasible, {}, {}};
  }

  std::vector<bool> is_pivot(n, false);
  for (int col : pivot_col_of_row) is_pivot[static_cast<size_t>(col)] = true;

  Vec point = zero_vec(dim);
  for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    point[static_cast<size_t>(pivot_col_of_row[r])] = rows[r][n];
  }

  std::vector<Vec> directions;
  for (size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    Vec dir = zero_vec(dim);
    dir[col] = Rational(1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      dir[static_cast<size_t>(pivot_col_of_row[r])] = -rows[r][col];
    }
    directions.push_back(std::move(dir));
  }

  if (directions.empty()) return {SolutionKind::unique, std::move(point), {}};
  return {SolutionKind::subspace, std::move(point), std::move(directions)};
}

}  // namespace gramcal
