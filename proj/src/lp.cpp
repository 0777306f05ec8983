#include "trop2/lp.hpp"

#include "trop2/error.hpp"

#include <limits>

namespace trop2 {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  // rows: coefficient rows over all columns; rhs >= 0.
  Tableau(std::vector<RationalVector> rows, RationalVector rhs, std::vector<std::size_t> basis,
          std::size_t num_cols)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), cols_(num_cols) {}

  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void remove_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Maximizes cost.y over columns with allowed[j]; Bland's rule.
  // Returns false when unbounded.
  bool optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // reduced cost z_j - c_j; entering: smallest j with negative value
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < cols_ && entering == kNone; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational z = -cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (sgn(rows_[i][j]) != 0 && sgn(cost[basis_[i]]) != 0) z += cost[basis_[i]] * rows_[i][j];
        if (sgn(z) < 0) entering = j;
      }
      if (entering == kNone) return true;
      std::size_t leaving = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][entering]) <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

  Rational objective_value(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  RationalVector column_values() const {
    RationalVector y(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rhs_[i];
    return y;
  }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  std::vector<RationalVector> rows_;
  RationalVector rhs_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LpResult maximize(std::size_t n, const std::vector<LinearConstraint>& constraints,
                  const RationalVector& objective) {
  if (objective.size() != n) throw Error(ErrorCode::DimensionMismatch, "lp: objective length");
  const std::size_t m = constraints.size();

  // Columns: x+ (n) | x- (n) | one slack per inequality | one artificial per row.
  std::size_t num_slack = 0;
  for (const auto& c : constraints) {
    if (c.a.size() != n) throw Error(ErrorCode::DimensionMismatch, "lp: constraint length");
    if (c.rel != Relation::Equal) ++num_slack;
  }
  const std::size_t slack0 = 2 * n, art0 = 2 * n + num_slack, cols = art0 + m;

  std::vector<RationalVector> rows(m, RationalVector(cols, Rational(0)));
  RationalVector rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t slack = slack0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    bool flip = sgn(c.b) < 0;
    Rational s = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = s * c.a[j];
      rows[i][n + j] = -s * c.a[j];
    }
    rhs[i] = s * c.b;
    std::size_t own_slack = kNone;
    if (c.rel != Relation::Equal) {
      own_slack = slack++;
      rows[i][own_slack] = (c.rel == Relation::LessEqual ? s : -s);
    }
    rows[i][art0 + i] = 1;
    basis[i] = (own_slack != kNone && rows[i][own_slack] == 1) ? own_slack : art0 + i;
  }

  Tableau tab(std::move(rows), std::move(rhs), std::move(basis), cols);

  // Phase one: maximize -(sum of artificials).
  RationalVector phase1(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  std::vector<bool> all(cols, true);
  tab.optimize(phase1, all);
  LpResult result;
  if (sgn(tab.objective_value(phase1)) < 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < tab.num_rows();) {
    if (tab.basis()[r] < art0) {
      ++r;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < art0 && col == kNone; ++j)
      if (sgn(tab.at(r, j)) != 0) col = j;
    if (col == kNone) {
      tab.remove_row(r);
    } else {
      tab.pivot(r, col);
      ++r;
    }
  }

  RationalVector cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  bool bounded = tab.optimize(cost, allowed);

  RationalVector y = tab.column_values();
  result.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) result.x[j] = y[j] - y[n + j];
  result.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
  result.value = dot(objective, result.x);
  return result;
}

LpResult find_feasible_point(std::size_t n, const std::vector<LinearConstraint>& constraints) {
  return maximize(n, constraints, RationalVector(n, Rational(0)));
}

std::size_t matrix_rank(std::vector<RationalVector> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace trop2
