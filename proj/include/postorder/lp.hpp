#pragma once

#include "postorder/rational.hpp"

#include <variant>

namespace postorder {

/// Feasibility problem { x : A x = b, x >= 0 } over the rationals.
struct LpProblem {
  RationalMatrix a;
  RationalVector b;

  Eigen::Index num_variables() const { return a.cols(); }
  Eigen::Index num_constraints() const { return a.rows(); }
};

/// Dual witness of infeasibility: y^T A <= 0 componentwise and y^T b > 0.
struct FarkasCertificate {
  RationalVector y;

  bool certifies(const LpProblem& p) const;
};

struct LpFeasible {
  RationalVector x;
};

struct LpInfeasible {
  FarkasCertificate certificate;
};

using LpResult = std::variant<LpFeasible, LpInfeasible>;

/// Decides feasibility with a two-phase-style exact simplex (phase one only)
/// under Bland's rule. The returned point or certificate has been checked
/// against the original data before return.
LpResult lp_feasible(const LpProblem& p);

inline bool is_feasible(const LpResult& r) { return std::holds_alternative<LpFeasible>(r); }

}  // namespace postorder
