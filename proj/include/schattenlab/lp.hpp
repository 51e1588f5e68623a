#pragma once

#include <cstddef>
#include <vector>

namespace schattenlab {

// maximize c^T y  subject to  A y <= b, y >= 0, with b >= 0 so that the
// slack basis is feasible. Dense tableau simplex, Dantzig pricing with a
// permanent switch to Bland's rule after a run of degenerate pivots.
struct PackingLp {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;   // row-major rows x cols
  std::vector<double> b;   // rows
  std::vector<double> c;   // cols
};

struct LpResult {
  enum class Status { optimal, unbounded, iteration_limit };
  Status status = Status::optimal;
  double objective = 0.0;
  std::vector<double> primal;   // y
  std::vector<double> dual;     // shadow prices x >= 0 with A^T x >= c, b^T x = objective
  std::size_t pivots = 0;
};

LpResult solve_packing_lp(const PackingLp& lp, std::size_t max_pivots = 200000);

}  // namespace schattenlab
