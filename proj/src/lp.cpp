#include "ditopo/lp.hpp"

#include <cstddef>

namespace ditopo {

namespace {

struct Tableau {
  std::vector<std::vector<Rat>> t;  // rows 0..m-1 constraints, row m cost
  std::vector<std::size_t> basis;
  std::size_t m = 0, cols = 0;  // cols excludes rhs
  Rat& rhs(std::size_t i) { return t[i][cols]; }

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = Rat(1) / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rat f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (!t[r][j].is_zero()) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Returns false when unbounded.
  bool run(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (t[m][j].sign() < 0) { enter = j; break; }
      if (enter == allowed) return true;
      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter].sign() <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult lp_minimize(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                     const std::vector<Rat>& c) {
  const std::size_t m = A.size(), n = c.size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i].sign() < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  Tableau T;
  T.m = m;
  T.cols = n + m;
  T.t.assign(m + 1, std::vector<Rat>(T.cols + 1));
  T.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T.t[i][j] = A[i][j];
    T.t[i][n + i] = 1;
    T.t[i][T.cols] = b[i];
    T.basis[i] = n + i;
  }
  // Phase 1: minimise the sum of artificials.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= T.cols; ++j)
      if (j < n || j == T.cols) T.t[m][j] -= T.t[i][j];
  T.run(T.cols);
  LPResult res;
  if (T.t[m][T.cols].sign() != 0) return res;  // infeasible
  for (std::size_t i = 0; i < m; ++i) {
    if (T.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!T.t[i][j].is_zero()) {
        T.pivot(i, j);
        break;
      }
  }
  // Phase 2.
  for (std::size_t j = 0; j <= T.cols; ++j) T.t[m][j] = j < n ? c[j] : Rat(0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bj = T.basis[i];
    if (bj >= n || c[bj].is_zero()) continue;
    Rat f = c[bj];
    for (std::size_t j = 0; j <= T.cols; ++j)
      if (!T.t[i][j].is_zero()) T.t[m][j] -= f * T.t[i][j];
  }
  if (!T.run(n)) {
    res.status = LPStatus::Unbounded;
    return res;
  }
  res.status = LPStatus::Optimal;
  res.value = -T.t[m][T.cols];
  res.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (T.basis[i] < n) res.x[T.basis[i]] = T.rhs(i);
  return res;
}

}  // namespace ditopo
