#include "schattenlab/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace schattenlab {

LpResult solve_packing_lp(const PackingLp& lp, std::size_t max_pivots) {
  const std::size_t m = lp.rows, n = lp.cols;
  if (lp.a.size() != m * n || lp.b.size() != m || lp.c.size() != n)
    throw std::invalid_argument("solve_packing_lp: inconsistent sizes");
  for (double v : lp.b)
    if (v < 0.0) throw std::invalid_argument("solve_packing_lp: rhs must be nonnegative");

  // tableau: m constraint rows + objective row; columns n structural, m slack, rhs
  const std::size_t width = n + m + 1;
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * width + c]; };
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = lp.a[r * n + c];
    at(r, n + r) = 1.0;
    at(r, width - 1) = lp.b[r];
  }
  for (std::size_t c = 0; c < n; ++c) at(m, c) = -lp.c[c];

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  double cscale = 1.0;
  for (double v : lp.c) cscale = std::max(cscale, std::abs(v));
  const double tol = 1e-11 * cscale;
  const double ptol = 1e-12;

  LpResult res;
  std::size_t degenerate_run = 0;
  bool bland = false;   // once switched on, Bland's rule stays on
  for (;;) {
    bland = bland || degenerate_run > 50;
    std::size_t enter = width;
    double most = -tol;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      const double rc = at(m, c);
      if (rc < most) {
        enter = c;
        if (bland) break;
        most = rc;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      const double coef = at(r, enter);
      if (coef <= ptol) continue;
      const double ratio = at(r, width - 1) / coef;
      const double tie = leave == m ? 0.0 : 1e-12 * std::max(1.0, best);
      if (leave == m || ratio < best - tie || (ratio <= best + tie && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == m) {
      res.status = LpResult::Status::unbounded;
      return res;
    }
    if (res.pivots++ >= max_pivots) {
      res.status = LpResult::Status::iteration_limit;
      return res;
    }
    degenerate_run = best <= 1e-12 ? degenerate_run + 1 : 0;

    const double piv = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) /= piv;
    const long long rows = static_cast<long long>(m + 1);
#pragma omp parallel for schedule(static)
    for (long long rr = 0; rr < rows; ++rr) {
      const std::size_t r = static_cast<std::size_t>(rr);
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
    }
    basis[leave] = enter;
  }

  res.primal.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) res.primal[basis[r]] = at(r, width - 1);
  res.dual.resize(m);
  for (std::size_t r = 0; r < m; ++r) res.dual[r] = std::max(0.0, at(m, n + r));
  res.objective = at(m, width - 1);
  return res;
}

}  // namespace schattenlab
