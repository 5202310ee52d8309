#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/boxes.hpp"
#include "charvar/group_model.hpp"
#include "charvar/int_matrix.hpp"
#include "charvar/mixing.hpp"

namespace charvar {

/// Traceless generator of a one-parameter subgroup of SL(n, R), with a
/// numeric noncompactness certificate (||exp(t X)|| large at t = +-50).
struct FlowGenerator {
  Eigen::MatrixXd x;
  bool noncompact = false;
};

FlowGenerator make_generator(const Eigen::MatrixXd& x);

/// A point of the flat bundle F_K: a det-1 basis (right-coset representative
/// of SL(n,R)/SL(n,Z), lattice vectors in columns) and a fiber in
/// X^0(Z^n, K). Renormalization multiplies the basis by a unimodular U on
/// the right and moves the fiber by act_on_quotient(fiber, U); replaying
/// holonomy_log on the initial fiber reproduces the final fiber exactly.
struct FlowState {
  Eigen::MatrixXd basis;
  QuotientPoint fiber;
  std::vector<IntMatrix> holonomy_log;
  double time = 0;
};

FlowState make_flow_state(const Eigen::MatrixXd& basis, QuotientPoint fiber);

/// LLL branch: if the basis fails the reducedness check (delta = 0.75), pull
/// it back by an exact unimodular U, move the fiber, and log U. Returns
/// whether a holonomy was applied.
bool renormalize(FlowState& s);

/// basis <- exp(dt X) basis (fiber untouched: the lift is trivial on the
/// second factor), det re-projected, then renormalize. Requires dt > 0 and
/// ||dt X|| <= 1.
void step(FlowState& s, const FlowGenerator& x, double dt);

/// Same step with a precomputed exp(dt X).
void step_with_exp(FlowState& s, const Eigen::MatrixXd& exp_dt_x, double dt);

struct FlowObservable {
  enum class Kind { Constant, ShortestBelow, GramEntry, FiberBox };
  Kind kind = Kind::Constant;
  double value = 1.0;            // Constant payload or ShortestBelow threshold
  std::size_t i = 0, j = 1;      // GramEntry indices
  SetDescriptor box;             // FiberBox payload (W-invariant membership)
  std::string text;

  double eval(const FlowState& s) const;
};

/// "const:1", "shortest<0.9", "gram:0,1", "box:0,0.5;0,0.5".
FlowObservable parse_observable(std::string_view text, const GroupModel& k, std::size_t n);

/// Ensemble estimate of cov(f(state_0), g(state_t)) over random initial
/// states (basis = exp of a bounded random traceless matrix, fiber uniform).
/// estimate = E[f g_t] - E[f] E[g_t], baseline = 0. Deterministic given
/// (seed, workers).
MixingSeries flow_correlation(std::size_t ensemble, const GroupModel& k, std::size_t n,
                              const FlowGenerator& x, const FlowObservable& f,
                              const FlowObservable& g, const std::vector<double>& t_list,
                              double dt, std::uint64_t seed, unsigned workers = 1);

struct FlowTraceRow {
  double t = 0;
  bool reduced = false;
  int holonomy_index = -1;  // index into holonomy_log, -1 if no reduction
};

struct FlowTrace {
  std::vector<FlowTraceRow> rows;
  FlowState final_state;
};

/// Single trajectory from a seeded random initial state.
FlowTrace run_flow_trace(const GroupModel& k, std::size_t n, const FlowGenerator& x,
                         double t_end, double dt, std::uint64_t seed);

std::string flow_trace_csv(const FlowTrace& tr);

}  // namespace charvar
