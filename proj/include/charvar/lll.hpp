#pragma once

#include <Eigen/Dense>

#include "charvar/int_matrix.hpp"

namespace charvar {

/// Size-reduction and Lovasz conditions on the columns of `basis`.
bool is_lll_reduced(const Eigen::MatrixXd& basis, double delta = 0.75,
                    double eta = 0.5 + 1e-9);

struct LLLResult {
  IntMatrix u;   // exact unimodular column transform, det(u) = +1
  bool changed;  // false iff u is the identity
};

/// LLL on the columns of `basis` (mutated in place: basis <- basis * u).
/// Gram-Schmidt runs in doubles; the transform u is tracked in exact
/// integers. u is normalized to det +1 by negating one column if needed.
LLLResult lll_reduce_columns(Eigen::MatrixXd& basis, double delta = 0.75);

}  // namespace charvar
