#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schattenlab/operators.hpp"
#include "schattenlab/oscnorms.hpp"

namespace schattenlab {

struct SingularValueProfile {
  std::vector<double> values;   // nonincreasing
  std::string source;
  std::string inner_product;

  // count of values above rel_tol * values[0]
  std::size_t numerical_rank(double rel_tol = 1e-10) const;
};

// Singular values of T on L^2(inner_weights): those of W^{1/2} T W^{-1/2}.
SingularValueProfile singular_values(const OperatorMatrix& T);

// l^{p,q} norm of the profile.
double schatten_norm(const SingularValueProfile& profile, const LorentzParams& params);

struct PEta {
  double value = 1.0;
  const char* relation = "";   // "<d" when d > 1, "=1" when d = 1
  bool holds = false;
};

// p(eta) = max{1, (eta/Delta + 1/2)^{-1}} together with the comparison
// against d = Delta.
PEta p_eta(double eta, double Delta);

}  // namespace schattenlab
