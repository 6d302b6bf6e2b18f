// Exact rational linear algebra: dense Gaussian elimination and a two-phase
// simplex with Bland's anti-cycling rule. Sized for the small systems the
// solvers produce (dozens of variables), not for scale.
#pragma once

#include <vector>

#include "rankeq/rat.hpp"

namespace rankeq {

struct LinearSystem {
  std::vector<std::vector<Rat>> coeffs;  // m x n
  std::vector<Rat> rhs;                  // m
};

enum class SystemKind { kUnique, kUnderdetermined, kInconsistent };

struct SystemSolution {
  SystemKind kind = SystemKind::kInconsistent;
  // A witness solution (free variables pinned to zero) unless inconsistent.
  std::vector<Rat> x;
};

/// Exact Gaussian elimination; classification is exact.
SystemSolution solve_system(const LinearSystem& sys);

enum class Relation { kLe, kEq, kGe };
enum class Sense { kMin, kMax };

struct LinearProgram {
  Sense sense = Sense::kMin;
  std::vector<Rat> objective;
  std::vector<std::vector<Rat>> rows;
  std::vector<Relation> relations;
  std::vector<Rat> rhs;
  // Variables are non-negative unless flagged free here (empty = all >= 0).
  std::vector<bool> free_vars;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  std::vector<Rat> x;
};

/// Exact optimum; the returned point satisfies every constraint exactly.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace rankeq
