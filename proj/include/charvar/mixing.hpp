#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charvar/boxes.hpp"
#include "charvar/group_model.hpp"
#include "charvar/int_matrix.hpp"

namespace charvar {

struct MixingPoint {
  double t = 0;
  double estimate = 0;
  double stderr_ = 0;
};

/// Monte Carlo correlation series. For estimate_mixing, estimate is the joint
/// mass mu(A intersect T^-t B) and baseline = mu_hat(A) * mu_hat(B) from the
/// same sample; for flow_correlation, estimate is the centered covariance and
/// baseline is 0.
struct MixingSeries {
  std::string a_text, b_text;
  std::vector<MixingPoint> points;
  double baseline = 0;
  double mu_a = 0, mu_b = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Estimates mu(A intersect T^-t B) for the action Theta -> Theta * M^t on the
/// k x r torus of `model`, with membership interpreted W-invariantly (some
/// Weyl translate lies in the box set). Sampling respects the model
/// constraints; matrix powers are exact integers reduced mod 2^64 at
/// application time. Deterministic given (seed, workers).
MixingSeries estimate_mixing(const GroupModel& model, const IntMatrix& m, std::size_t r,
                             const SetDescriptor& a, const SetDescriptor& b,
                             const std::vector<std::uint64_t>& t_list,
                             std::uint64_t samples, std::uint64_t seed,
                             unsigned workers = 1);

std::string mixing_series_csv(const MixingSeries& s);

}  // namespace charvar
