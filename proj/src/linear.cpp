#include "rankeq/linear.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace rankeq {

SystemSolution solve_system(const LinearSystem& sys) {
  const std::size_t m = sys.coeffs.size();
  const std::size_t n = m == 0 ? 0 : sys.coeffs[0].size();
  if (sys.rhs.size() != m)
    throw std::invalid_argument("solve_system: rhs size mismatch");
  std::vector<std::vector<Rat>> a = sys.coeffs;
  std::vector<Rat> b = sys.rhs;
  for (const auto& row : a)
    if (row.size() != n)
      throw std::invalid_argument("solve_system: ragged matrix");

  std::vector<std::size_t> pivot_col;  // pivot column of elimination row k
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const Rat inv = Rat(1) / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (!b[r].is_zero()) return {SystemKind::kInconsistent, {}};

  SystemSolution out;
  out.kind = pivot_col.size() == n ? SystemKind::kUnique
                                   : SystemKind::kUnderdetermined;
  out.x.assign(n, Rat(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) out.x[pivot_col[k]] = b[k];
  return out;
}

namespace {

// Dense tableau in canonical form; basis columns stay identity.
struct Tableau {
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  std::vector<Rat> cost;  // reduced costs
  Rat value;              // objective value of the current basis
  std::vector<std::size_t> basis;

  std::size_t width() const { return cost.size(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = Rat(1) / rows[r][c];
    for (Rat& v : rows[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      const Rat f = rows[k][c];
      for (std::size_t j = 0; j < width(); ++j) rows[k][j] -= f * rows[r][j];
      rhs[k] -= f * rhs[r];
    }
    if (!cost[c].is_zero()) {
      const Rat f = cost[c];
      for (std::size_t j = 0; j < width(); ++j) cost[j] -= f * rows[r][j];
      value -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Bland's rule: lowest-index entering column with negative reduced cost;
  // lowest-index basic variable among tied minimum ratios.
  // Returns false at optimality; throws-free unbounded signal via flag.
  enum class Step { kOptimal, kPivoted, kUnbounded };
  Step step(const std::vector<bool>& allowed) {
    std::size_t enter = width();
    for (std::size_t j = 0; j < width(); ++j) {
      if (allowed[j] && cost[j].is_negative()) {
        enter = j;
        break;
      }
    }
    if (enter == width()) return Step::kOptimal;
    std::size_t leave = rows.size();
    Rat best_ratio;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!(rows[r][enter] > Rat(0))) continue;
      const Rat ratio = rhs[r] / rows[r][enter];
      if (leave == rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows.size()) return Step::kUnbounded;
    pivot(leave, enter);
    return Step::kPivoted;
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();
  if (lp.rhs.size() != m || lp.relations.size() != m)
    throw std::invalid_argument("solve_lp: inconsistent dimensions");
  for (const auto& row : lp.rows)
    if (row.size() != n) throw std::invalid_argument("solve_lp: ragged rows");
  std::vector<bool> is_free(n, false);
  if (!lp.free_vars.empty()) {
    if (lp.free_vars.size() != n)
      throw std::invalid_argument("solve_lp: free_vars size mismatch");
    is_free = lp.free_vars;
  }

  // Column layout: for each original variable one column, plus a paired
  // negative column for free variables, then slacks/surpluses, then
  // artificials.
  std::vector<std::size_t> neg_col(n, std::numeric_limits<std::size_t>::max());
  std::size_t cols = n;
  for (std::size_t j = 0; j < n; ++j)
    if (is_free[j]) neg_col[j] = cols++;
  const std::size_t slack_base = cols;
  std::size_t num_slacks = 0;
  for (auto rel : lp.relations)
    if (rel != Relation::kEq) ++num_slacks;
  cols += num_slacks;
  const std::size_t artificial_base = cols;
  cols += m;  // at most one artificial per row

  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> rhs(m);
  std::vector<Rat> obj(cols, Rat(0));
  const Rat sign = lp.sense == Sense::kMax ? Rat(-1) : Rat(1);
  for (std::size_t j = 0; j < n; ++j) {
    obj[j] = sign * lp.objective[j];
    if (is_free[j]) obj[neg_col[j]] = -obj[j];
  }

  std::vector<std::size_t> basis(m);
  std::vector<bool> has_artificial(m, false);
  std::size_t slack_idx = slack_base;
  for (std::size_t r = 0; r < m; ++r) {
    Rat b = lp.rhs[r];
    Rat row_sign(1);
    Relation rel = lp.relations[r];
    if (b.is_negative()) {
      b = -b;
      row_sign = Rat(-1);
      if (rel == Relation::kLe)
        rel = Relation::kGe;
      else if (rel == Relation::kGe)
        rel = Relation::kLe;
    }
    for (std::size_t j = 0; j < n; ++j) {
      rows[r][j] = row_sign * lp.rows[r][j];
      if (is_free[j]) rows[r][neg_col[j]] = -rows[r][j];
    }
    rhs[r] = b;
    if (rel == Relation::kLe) {
      rows[r][slack_idx] = Rat(1);
      basis[r] = slack_idx++;
    } else {
      if (rel == Relation::kGe) rows[r][slack_idx++] = Rat(-1);
      rows[r][artificial_base + r] = Rat(1);
      basis[r] = artificial_base + r;
      has_artificial[r] = true;
    }
  }

  Tableau t;
  t.rows = std::move(rows);
  t.rhs = std::move(rhs);
  t.basis = basis;
  t.value = Rat(0);

  // Phase 1: minimize the sum of artificials.
  t.cost.assign(cols, Rat(0));
  for (std::size_t r = 0; r < m; ++r)
    if (has_artificial[r]) t.cost[artificial_base + r] = Rat(1);
  for (std::size_t r = 0; r < m; ++r) {
    if (!has_artificial[r]) continue;
    for (std::size_t j = 0; j < cols; ++j) t.cost[j] -= t.rows[r][j];
    t.value -= t.rhs[r];
  }
  std::vector<bool> allowed(cols, true);
  while (true) {
    const auto s = t.step(allowed);
    if (s == Tableau::Step::kOptimal) break;
    if (s == Tableau::Step::kUnbounded)
      throw std::logic_error("solve_lp: phase 1 unbounded");
  }
  if (!(-t.value == Rat(0))) return {LpStatus::kInfeasible, Rat(0), {}};

  // Drive remaining artificials out of the basis; rows that cannot pivot
  // are redundant and get dropped.
  for (std::size_t r = t.rows.size(); r-- > 0;) {
    if (t.basis[r] < artificial_base) continue;
    std::size_t c = artificial_base;
    for (std::size_t j = 0; j < artificial_base; ++j) {
      if (!t.rows[r][j].is_zero()) {
        c = j;
        break;
      }
    }
    if (c < artificial_base) {
      t.pivot(r, c);
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }
  for (std::size_t j = artificial_base; j < cols; ++j) allowed[j] = false;

  // Phase 2: the real objective, with artificial columns barred.
  t.cost = obj;
  t.value = Rat(0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::size_t bv = t.basis[r];
    if (t.cost[bv].is_zero()) continue;
    const Rat f = t.cost[bv];
    for (std::size_t j = 0; j < cols; ++j) t.cost[j] -= f * t.rows[r][j];
    t.value -= f * t.rhs[r];
  }
  while (true) {
    const auto s = t.step(allowed);
    if (s == Tableau::Step::kOptimal) break;
    if (s == Tableau::Step::kUnbounded) return {LpStatus::kUnbounded, Rat(0), {}};
  }

  LpSolution out;
  out.status = LpStatus::kOptimal;
  std::vector<Rat> full(cols, Rat(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r) full[t.basis[r]] = t.rhs[r];
  out.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.x[j] = full[j];
    if (is_free[j]) out.x[j] -= full[neg_col[j]];
  }
  // t.value holds -(objective of current basis) relative to zero start.
  out.value = -t.value;
  if (lp.sense == Sense::kMax) out.value = -out.value;
  return out;
}

}  // namespace rankeq
