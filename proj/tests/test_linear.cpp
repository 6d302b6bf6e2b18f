#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rankeq/gen.hpp"
#include "rankeq/linear.hpp"

using namespace rankeq;
using namespace rankeq::test;

TEST_CASE("two equations, unique solution") {
  LinearSystem sys;
  sys.coeffs = {{R(1), R(1)}, {R(1), R(-1)}};
  sys.rhs = {R(1), R(0)};
  const auto sol = solve_system(sys);
  REQUIRE(sol.kind == SystemKind::kUnique);
  CHECK(sol.x == std::vector<Rat>{R(1, 2), R(1, 2)});
}

TEST_CASE("singular systems classify exactly") {
  LinearSystem sys;
  sys.coeffs = {{R(1), R(2)}, {R(2), R(4)}};
  sys.rhs = {R(3), R(6)};
  auto sol = solve_system(sys);
  CHECK(sol.kind == SystemKind::kUnderdetermined);
  // The witness still solves the system.
  CHECK(sol.x[0] + R(2) * sol.x[1] == R(3));

  sys.rhs = {R(3), R(7)};
  sol = solve_system(sys);
  CHECK(sol.kind == SystemKind::kInconsistent);
}

TEST_CASE("rectangular systems") {
  LinearSystem sys;
  sys.coeffs = {{R(1), R(0)}, {R(0), R(1)}, {R(1), R(1)}};
  sys.rhs = {R(2), R(3), R(5)};
  CHECK(solve_system(sys).kind == SystemKind::kUnique);
  sys.rhs = {R(2), R(3), R(4)};
  CHECK(solve_system(sys).kind == SystemKind::kInconsistent);
}

TEST_CASE("simple bounded maximum") {
  LinearProgram lp;
  lp.sense = Sense::kMax;
  lp.objective = {R(1)};
  lp.rows = {{R(1)}};
  lp.relations = {Relation::kLe};
  lp.rhs = {R(3)};
  const auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == R(3));
  CHECK(sol.x == std::vector<Rat>{R(3)});
}

TEST_CASE("unbounded and infeasible programs") {
  LinearProgram lp;
  lp.sense = Sense::kMax;
  lp.objective = {R(1)};
  lp.rows = {};
  lp.relations = {};
  lp.rhs = {};
  CHECK(solve_lp(lp).status == LpStatus::kUnbounded);

  lp.rows = {{R(1)}};
  lp.relations = {Relation::kLe};
  lp.rhs = {R(-1)};
  CHECK(solve_lp(lp).status == LpStatus::kInfeasible);
}

TEST_CASE("matching pennies value program") {
  // Variables: p1, p2, v (free). Maximize v subject to the column payoffs
  // p1 - p2 and p2 - p1 both covering v, with p a distribution.
  LinearProgram lp;
  lp.sense = Sense::kMax;
  lp.objective = {R(0), R(0), R(1)};
  lp.free_vars = {false, false, true};
  lp.rows = {
      {R(1), R(-1), R(-1)},
      {R(-1), R(1), R(-1)},
      {R(1), R(1), R(0)},
  };
  lp.relations = {Relation::kGe, Relation::kGe, Relation::kEq};
  lp.rhs = {R(0), R(0), R(1)};
  const auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == R(0));
  CHECK(sol.x[0] == R(1, 2));
  CHECK(sol.x[1] == R(1, 2));
}

TEST_CASE("degenerate program known to cycle without an anti-cycling rule") {
  LinearProgram lp;
  lp.sense = Sense::kMin;
  lp.objective = {R(-3, 4), R(150), R(-1, 50), R(6)};
  lp.rows = {
      {R(1, 4), R(-60), R(-1, 25), R(9)},
      {R(1, 2), R(-90), R(-1, 50), R(3)},
      {R(0), R(0), R(1), R(0)},
  };
  lp.relations = {Relation::kLe, Relation::kLe, Relation::kLe};
  lp.rhs = {R(0), R(0), R(1)};
  const auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == R(-1, 20));
}

TEST_CASE("equality-constrained program with negative right-hand side") {
  LinearProgram lp;
  lp.sense = Sense::kMin;
  lp.objective = {R(1), R(2)};
  lp.rows = {{R(-1), R(-1)}};
  lp.relations = {Relation::kEq};
  lp.rhs = {R(-4)};
  const auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == R(4));
  CHECK(sol.x == std::vector<Rat>{R(4), R(0)});
}

TEST_CASE("returned points satisfy constraints exactly and match the dual") {
  SplitMix64 rng(5);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const std::size_t m = 1 + rng.below(3);
    LinearProgram primal;
    primal.sense = Sense::kMin;
    for (std::size_t j = 0; j < n; ++j)
      primal.objective.push_back(R(1 + static_cast<long long>(rng.below(6)),
                                   1 + static_cast<long long>(rng.below(3))));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rat> row;
      for (std::size_t j = 0; j < n; ++j)
        row.push_back(R(static_cast<long long>(rng.below(4)),
                        1 + static_cast<long long>(rng.below(2))));
      row[rng.below(n)] += R(1);  // keep every row satisfiable by scaling
      primal.rows.push_back(std::move(row));
      primal.relations.push_back(Relation::kGe);
      primal.rhs.push_back(R(static_cast<long long>(rng.below(8))));
    }
    const auto sol = solve_lp(primal);
    REQUIRE(sol.status == LpStatus::kOptimal);
    ++solved;
    // Exact feasibility.
    for (std::size_t i = 0; i < m; ++i) {
      Rat lhs(0);
      for (std::size_t j = 0; j < n; ++j)
        lhs += primal.rows[i][j] * sol.x[j];
      CHECK(lhs >= primal.rhs[i]);
    }
    // Strong duality: max b'y subject to A'y <= c, y >= 0.
    LinearProgram dual;
    dual.sense = Sense::kMax;
    dual.objective = primal.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rat> row;
      for (std::size_t i = 0; i < m; ++i) row.push_back(primal.rows[i][j]);
      dual.rows.push_back(std::move(row));
      dual.relations.push_back(Relation::kLe);
      dual.rhs.push_back(primal.objective[j]);
    }
    const auto dual_sol = solve_lp(dual);
    REQUIRE(dual_sol.status == LpStatus::kOptimal);
    CHECK(dual_sol.value == sol.value);
  }
  CHECK(solved == 40);
}
