#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "charvar/int_matrix.hpp"

namespace charvar {

/// A point of (U(1)^k)^r as a k x r matrix of fractional angles in [0,1).
struct TorusPoint {
  std::size_t k = 0, r = 0;
  std::vector<double> angles;  // row-major

  TorusPoint() = default;
  TorusPoint(std::size_t k_, std::size_t r_) : k(k_), r(r_), angles(k_ * r_, 0.0) {}
  static TorusPoint from_rows(std::initializer_list<std::initializer_list<double>> rows);

  double& at(std::size_t i, std::size_t j) { return angles[i * r + j]; }
  double at(std::size_t i, std::size_t j) const { return angles[i * r + j]; }
};

/// Exact torsion point: angles = num / q entrywise, 0 <= num < q.
struct RationalTorusPoint {
  std::size_t k = 0, r = 0;
  std::vector<Integer> num;  // row-major
  Integer q = 1;
};

/// Integer frequency matrix N; pairing <N, Theta> = sum N_ij theta_ij defines
/// the character e_N.
using FrequencyMatrix = IntMatrix;

double reduce_mod_1(double x);

/// The action Theta -> Theta * M, reduced mod 1 entrywise.
TorusPoint act(const TorusPoint& theta, const IntMatrix& m);
RationalTorusPoint act(const RationalTorusPoint& theta, const IntMatrix& m);

/// N -> N * M^t, so that e_N(act(Theta, M)) == e_{pushforward}(Theta).
FrequencyMatrix frequency_pushforward(const FrequencyMatrix& n, const IntMatrix& m);

/// e_N(Theta) = exp(2 pi i <N, Theta>).
std::complex<double> character_value(const FrequencyMatrix& n, const TorusPoint& theta);

// --- 64-bit fixed-point phases ------------------------------------------
// An angle is a uint64 numerator over 2^64; Theta * M mod 1 is then exact
// integer arithmetic mod 2^64 regardless of how large M's entries are.

struct PhaseMatrix {
  std::size_t k = 0, r = 0;
  std::vector<std::uint64_t> v;  // row-major

  PhaseMatrix() = default;
  PhaseMatrix(std::size_t k_, std::size_t r_) : k(k_), r(r_), v(k_ * r_, 0) {}
  std::uint64_t at(std::size_t i, std::size_t j) const { return v[i * r + j]; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return v[i * r + j]; }
};

struct U64Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> v;
  std::uint64_t at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

U64Matrix reduce_mod_2_64(const IntMatrix& m);
PhaseMatrix apply_right(const PhaseMatrix& theta, const U64Matrix& m);  // Theta * M
PhaseMatrix apply_left(const U64Matrix& w, const PhaseMatrix& theta);   // w * Theta
TorusPoint to_angles(const PhaseMatrix& p);
PhaseMatrix to_phases(const TorusPoint& t);
std::uint64_t angle_to_phase(double a);

// --- Fourier-orbit escape test (the Lemma on unbounded integer orbits) ----

enum class OrbitOutcome { Escaped, Periodic, Undecided };

struct EscapeEntry {
  std::vector<long> start;  // the frequency vector N
  OrbitOutcome outcome;
  std::uint64_t t;  // escape time, period, or t_max
};

struct EscapeReport {
  long box_radius = 0;
  Integer escape_radius;
  std::uint64_t t_max = 0;
  std::vector<EscapeEntry> entries;
  std::size_t escaped = 0, periodic = 0, undecided = 0;
  std::uint64_t max_escape_time = 0;
};

/// Iterates N -> N * M^t over every nonzero N in the sup-norm box until the
/// orbit leaves the escape radius, revisits its start (certifying a
/// root-of-unity eigenvalue), or hits t_max. Exact arithmetic throughout.
EscapeReport escape_report(const IntMatrix& m, long box_radius,
                           const Integer& escape_radius, std::uint64_t t_max);

/// |(1/T) sum_{t<T} e_N(Theta_t)| along Theta_{t+1} = act(Theta_t, M),
/// computed on exact 64-bit phases.
double birkhoff_character_average(const IntMatrix& m, const FrequencyMatrix& n,
                                  const TorusPoint& theta0, std::uint64_t t_total);

}  // namespace charvar
