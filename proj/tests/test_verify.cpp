#include <doctest.h>

#include "gramcal/decomp.hpp"
#include "gramcal/errors.hpp"
#include "gramcal/verify.hpp"
#include "support/fixtures.hpp"

using namespace gramcal;
namespace fx = gramcal::fixtures;

TEST_CASE("arrangement cell counts") {
  SUBCASE("two axes in the plane give 9 cells") {
    const auto cells = arrangement_cells({form_from({1, 0}, 0), form_from({0, 1}, 0)}, 2);
    CHECK(cells.cells.size() == 9);
  }
  SUBCASE("x=0, y=0, x+y=1 give 19 cells split 7/9/3") {
    const auto cells = arrangement_cells(
        {form_from({1, 0}, 0), form_from({0, 1}, 0), form_from({1, 1}, -1)}, 2);
    REQUIRE(cells.cells.size() == 19);
    size_t by_zeros[3] = {0, 0, 0};
    for (const auto& cell : cells.cells) {
      size_t zeros = 0;
      for (int s : cell.signs) zeros += s == 0;
      ++by_zeros[zeros];
    }
    CHECK(by_zeros[0] == 7);
    CHECK(by_zeros[1] == 9);
    CHECK(by_zeros[2] == 3);
  }
  SUBCASE("one hyperplane in R^3 gives 3 cells") {
    const auto cells = arrangement_cells({form_from({1, 2, -1}, 3)}, 3);
    CHECK(cells.cells.size() == 3);
  }
  SUBCASE("one line in the plane gives 3 cells") {
    CHECK(arrangement_cells({form_from({2, -3}, 1)}, 2).cells.size() == 3);
  }
  SUBCASE("duplicates and opposite orientations collapse") {
    const auto cells = arrangement_cells(
        {form_from({1, 0}, 0), form_from({-2, 0}, 0), form_from({3, 0}, 0)}, 2);
    CHECK(cells.hyperplanes.size() == 1);
    CHECK(cells.cells.size() == 3);
  }
}

TEST_CASE("cell representatives reproduce their sign vectors") {
  const auto cells = arrangement_cells(
      {form_from({1, 0}, 0), form_from({0, 1}, 0), form_from({1, 1}, -1)}, 2);
  for (const auto& cell : cells.cells) {
    for (size_t i = 0; i < cells.hyperplanes.size(); ++i) {
      const Rational v = cells.hyperplanes[i].value_at(cell.rep);
      const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
      CHECK(sign == cell.signs[i]);
    }
  }
}

TEST_CASE("cell soundness: sign vectors decide membership and active sets") {
  const WeightedPolyhedron wp = fx::triangle();
  const FormalSum bg = brianchon_gram(wp);
  const FormalSum target = indicator_sum(wp);
  const auto planes = collect_hyperplanes({&bg, &target});
  const auto cells = arrangement_cells(planes, 2);
  REQUIRE(cells.cells.size() == 19);

  for (const auto& cell : cells.cells) {
    for (const auto& sum : {&bg, &target}) {
      for (const auto& term : sum->terms()) {
        for (const auto& c : term.body.constraints) {
          if (c.form.trivial()) continue;
          // Locate the constraint's canonical hyperplane and orientation.
          const AffineForm canon = canonical_hyperplane(c.form);
          size_t index = cells.hyperplanes.size();
          for (size_t i = 0; i < cells.hyperplanes.size(); ++i) {
            if (cells.hyperplanes[i] == canon) index = i;
          }
          REQUIRE(index < cells.hyperplanes.size());
          const bool flipped = canonical_halfspace(c.form) != canon;
          const int sign = flipped ? -cell.signs[index] : cell.signs[index];
          // Sign-vector verdicts match exact evaluation at the representative.
          const Rational v = c.form.value_at(cell.rep);
          CHECK((sign > 0) == (v > 0));
          CHECK((sign == 0) == (v == 0));
        }
      }
    }
  }
}

TEST_CASE("identity_check") {
  const WeightedPolyhedron wp = fx::triangle();
  const FormalSum bg = brianchon_gram(wp);
  const FormalSum target = indicator_sum(wp);

  SUBCASE("the Brianchon-Gram identity holds on all 19 cells") {
    const Verdict verdict = identity_check(bg, target);
    CHECK(verdict.is_equal());
    CHECK(verdict.mode == "cells");
    CHECK(verdict.checked == 19);
  }
  SUBCASE("a deliberate sign flip is caught with a concrete witness") {
    const FormalSum corrupted = mutate_sum(bg, MutationKind::flip_sign);
    const Verdict verdict = identity_check(corrupted, target);
    REQUIRE(verdict.kind == Verdict::Kind::unequal);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->lhs_value != verdict.witness->rhs_value);
    // The witness point exhibits the difference on re-evaluation.
    CHECK(fs_evaluate(corrupted, verdict.witness->point) ==
          verdict.witness->lhs_value);
    CHECK(fs_evaluate(target, verdict.witness->point) == verdict.witness->rhs_value);
  }
  SUBCASE("an identity checks equal against itself") {
    CHECK(identity_check(bg, bg).is_equal());
    CHECK(identity_check(target, target).is_equal());
  }
  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(identity_check(bg, indicator_sum(fx::interval01())), input_error);
  }
}

TEST_CASE("identity_check_on a shared decomposition") {
  const WeightedPolyhedron wp = fx::triangle();
  const FormalSum bg = brianchon_gram(wp);
  const FormalSum target = indicator_sum(wp);
  const auto cells = arrangement_cells(collect_hyperplanes({&bg, &target}), 2);
  CHECK(identity_check_on(cells, bg, target).is_equal());

  // A sum over unrelated hyperplanes is refused.
  FormalSum stranger(2);
  stranger.append(Poly(1), WeightedBody{2, {{form_from({5, 7}, 11), Poly(1)}}});
  CHECK_THROWS_AS(identity_check_on(cells, stranger, stranger), input_error);
}

TEST_CASE("every constructed decomposition checks equal against itself") {
  for (const auto& base : {fx::triangle(), fx::unit_square()}) {
    const auto lattice = enumerate_faces(base.poly);
    std::vector<FormalSum> sums;
    sums.push_back(brianchon_gram(base, lattice));
    sums.push_back(face_expansion(base, lattice));
    const WeightedPolyhedron all_q = fx::with_all_weights_q(base);
    const Vec xi = sample_polarizing(base.poly, lattice);
    sums.push_back(polar_total(polar_decompose(all_q, lattice, xi), base.poly.dim));
    for (const auto& s : sums) CHECK(identity_check(s, s).is_equal());
  }
}

TEST_CASE("cell cap") {
  std::vector<AffineForm> forms;
  for (long k = 1; k <= 13; ++k) forms.push_back({{Rational(1), Rational(k)}, Rational(k * k)});
  CHECK_THROWS_AS(arrangement_cells(forms, 2), cell_cap_exceeded);
  const auto cells = arrangement_cells(forms, 2, 13);
  CHECK(cells.hyperplanes.size() == 13);
}

TEST_CASE("random_point_check") {
  const WeightedPolyhedron cube4 = fx::cube4();
  const FormalSum bg = brianchon_gram(cube4);
  const FormalSum target = indicator_sum(cube4);

  SUBCASE("equal sums are consistent for any seed") {
    for (uint64_t seed : {1, 7, 99}) {
      const Verdict verdict = random_point_check(bg, target, 25, seed);
      CHECK(verdict.kind == Verdict::Kind::consistent);
      CHECK(verdict.mode == "random");
    }
  }
  SUBCASE("a corrupted 4-cube decomposition is caught within 1000 trials") {
    const FormalSum corrupted = mutate_sum(bg, MutationKind::flip_sign);
    const Verdict verdict = random_point_check(corrupted, target, 1000, 1);
    REQUIRE(verdict.kind == Verdict::Kind::unequal);
    REQUIRE(verdict.witness.has_value());
    CHECK(fs_evaluate(corrupted, verdict.witness->point) !=
          fs_evaluate(target, verdict.witness->point));
  }
  SUBCASE("zero trials is an input error") {
    CHECK_THROWS_AS(random_point_check(bg, target, 0, 1), input_error);
  }
  SUBCASE("identity_check falls back past the cap when allowed") {
    CheckOptions options;
    options.cell_cap = 4;
    CHECK_THROWS_AS(identity_check(bg, target, options), cell_cap_exceeded);
    options.fallback_samples = 50;
    const Verdict verdict = identity_check(bg, target, options);
    CHECK(verdict.mode == "random");
    CHECK(verdict.kind == Verdict::Kind::consistent);
  }
}
