#include "pdel/simplex.hpp"

#include <algorithm>

namespace pdel {

namespace {

/// Dense tableau with an explicit basis. Rows 0..m-1 are constraints in
/// equality form with nonnegative right-hand sides; row m is the objective
/// in reduced-cost form (we maximise, entering on positive reduced cost,
/// Bland's smallest-index rule both ways).
struct Tableau {
  int m = 0, n = 0;                      // constraints, columns (without rhs)
  std::vector<std::vector<Rational>> a;  // (m+1) x (n+1), last column rhs
  std::vector<int> basis;                // basic variable per row

  Rational& at(int i, int j) { return a[i][j]; }
  Rational& rhs(int i) { return a[i][n]; }

  void pivot(int row, int col) {
    Rational p = a[row][col];
    for (int j = 0; j <= n; ++j) a[row][j] /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      Rational f = a[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= n; ++j) a[i][j] -= f * a[row][j];
    }
    basis[row] = col;
  }

  /// Runs simplex iterations until optimality or unboundedness.
  LpStatus iterate(const std::vector<char>& allowed) {
    while (true) {
      int col = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && a[m][j] > 0) {
          col = j;
          break;
        }
      if (col < 0) return LpStatus::Optimal;

      int row = -1;
      Rational best = 0;
      for (int i = 0; i < m; ++i) {
        if (a[i][col] <= 0) continue;
        Rational ratio = rhs(i) / a[i][col];
        if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row < 0) return LpStatus::Unbounded;
      pivot(row, col);
    }
  }
};

}  // namespace

LpResult solve_lp(int numVars, const std::vector<LpRow>& rows,
                  const std::vector<Rational>& objective) {
  // normalise: Ge rows negated into Le, then everything to equality form
  struct NormRow {
    std::vector<Rational> a;
    Rational b;
    bool isEq;
  };
  std::vector<NormRow> norm;
  for (const auto& r : rows) {
    NormRow nr{std::vector<Rational>(numVars, 0), r.rhs, r.cmp == LpCmp::Eq};
    for (auto& [j, c] : r.coeff) {
      if (j < 0 || j >= numVars) throw std::invalid_argument("lp variable out of range");
      nr.a[j] += c;
    }
    if (r.cmp == LpCmp::Ge) {
      for (auto& c : nr.a) c = -c;
      nr.b = -nr.b;
    }
    norm.push_back(std::move(nr));
  }

  const int m = static_cast<int>(norm.size());
  // columns: numVars structurals, one slack per inequality, artificials later
  int slackCount = 0;
  for (const auto& r : norm)
    if (!r.isEq) ++slackCount;

  int nCols = numVars + slackCount;
  std::vector<int> slackOf(m, -1);
  {
    int s = numVars;
    for (int i = 0; i < m; ++i)
      if (!norm[i].isEq) slackOf[i] = s++;
  }

  // artificials for rows whose slack cannot start basic
  std::vector<int> artOf(m, -1);
  std::vector<char> rowNegated(m, 0);
  for (int i = 0; i < m; ++i) {
    bool negate = norm[i].b < 0;
    rowNegated[i] = negate;
    bool slackUsable = slackOf[i] >= 0 && !negate;
    if (!slackUsable) artOf[i] = nCols++;
  }

  Tableau T;
  T.m = m;
  T.n = nCols;
  T.a.assign(m + 1, std::vector<Rational>(nCols + 1, Rational(0)));
  T.basis.assign(m, -1);

  for (int i = 0; i < m; ++i) {
    Rational sign = rowNegated[i] ? -1 : 1;
    for (int j = 0; j < numVars; ++j) T.at(i, j) = sign * norm[i].a[j];
    if (slackOf[i] >= 0) T.at(i, slackOf[i]) = sign;
    T.rhs(i) = sign * norm[i].b;
    if (artOf[i] >= 0) {
      T.at(i, artOf[i]) = 1;
      T.basis[i] = artOf[i];
    } else {
      T.basis[i] = slackOf[i];
    }
  }

  std::vector<char> allowed(nCols, 1);

  // phase one: maximise -(sum of artificials)
  bool needPhase1 = std::any_of(artOf.begin(), artOf.end(), [](int a) { return a >= 0; });
  if (needPhase1) {
    for (int i = 0; i < m; ++i)
      if (artOf[i] >= 0)
        for (int j = 0; j <= T.n; ++j) T.a[m][j] += T.a[i][j];
    // objective row now holds sum of artificial rows; entering on positive
    // reduced cost drives the artificial total down
    for (int i = 0; i < m; ++i)
      if (artOf[i] >= 0) T.a[m][artOf[i]] = 0;

    LpStatus st = T.iterate(allowed);
    (void)st;  // phase one is bounded below by construction
    if (T.a[m][T.n] != 0) return {LpStatus::Infeasible, {}, 0};

    // pivot leftover zero-value artificials out of the basis when possible
    for (int i = 0; i < m; ++i) {
      if (std::find(artOf.begin(), artOf.end(), T.basis[i]) == artOf.end()) continue;
      int col = -1;
      for (int j = 0; j < numVars + slackCount; ++j)
        if (T.at(i, j) != 0) {
          col = j;
          break;
        }
      if (col >= 0) T.pivot(i, col);
    }
    for (int i = 0; i < m; ++i)
      if (artOf[i] >= 0) allowed[artOf[i]] = 0;
    for (int j = 0; j <= T.n; ++j) T.a[m][j] = 0;
  }

  // phase two objective in reduced-cost form
  for (int j = 0; j < numVars; ++j)
    T.a[m][j] = j < static_cast<int>(objective.size()) ? objective[j] : Rational(0);
  for (int i = 0; i < m; ++i) {
    int b = T.basis[i];
    Rational c = T.a[m][b];
    if (c == 0) continue;
    for (int j = 0; j <= T.n; ++j) T.a[m][j] -= c * T.a[i][j];
  }

  LpStatus st = T.iterate(allowed);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, 0};

  LpResult out;
  out.status = LpStatus::Optimal;
  out.x.assign(numVars, Rational(0));
  for (int i = 0; i < m; ++i)
    if (T.basis[i] < numVars) out.x[T.basis[i]] = T.rhs(i);
  out.objective = -T.a[m][T.n];
  return out;
}

}  // namespace pdel
