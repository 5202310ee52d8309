#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "charvar/int_matrix.hpp"
#include "charvar/torus.hpp"

namespace charvar {

/// A compact connected group at the fidelity the torus dynamics needs: torus
/// coordinates, the Weyl group as integer matrices on them, and optional
/// linear constraints (index subsets whose angles sum to 0 mod 1).
///
/// coords() counts torus coordinates (the k of TorusPoint); rank() is
/// coords() minus the number of constraints, i.e. the dimension of the
/// constrained torus.
class GroupModel {
 public:
  GroupModel(std::string name, std::size_t coords,
             std::vector<IntMatrix> weyl_generators,
             std::vector<std::vector<std::size_t>> constraints);

  const std::string& name() const { return name_; }
  std::size_t coords() const { return coords_; }
  std::size_t rank() const { return coords_ - constraints_.size(); }
  const std::vector<IntMatrix>& weyl_generators() const { return generators_; }
  const std::vector<std::vector<std::size_t>>& constraints() const { return constraints_; }

  /// Full Weyl enumeration (memoized once; cap 10^7 elements). Honors
  /// CHARVAR_CACHE_DIR as an on-disk cache keyed by model name.
  const std::vector<IntMatrix>& weyl_elements() const;
  std::size_t weyl_order() const { return weyl_elements().size(); }

 private:
  struct Cache;
  std::string name_;
  std::size_t coords_;
  std::vector<IntMatrix> generators_;
  std::vector<std::vector<std::size_t>> constraints_;
  std::shared_ptr<Cache> cache_;
};

GroupModel make_torus(std::size_t k);
GroupModel make_unitary(std::size_t n);
GroupModel make_special_unitary(std::size_t n);
GroupModel make_symplectic(std::size_t n);       // signed permutations
GroupModel make_odd_orthogonal(std::size_t n);   // signed permutations
GroupModel make_even_orthogonal(std::size_t n);  // evenly-signed permutations
GroupModel make_gmp(std::size_t m, unsigned p);  // m blocks of the SU(p) torus

/// Parses "T4", "U2", "SU3", "Sp2", "B3", "D4", "Gmp:2,3".
GroupModel builtin_model(const std::string& descriptor);

/// Lexicographically least element of the W-orbit {w Theta mod 1}, compared
/// after quantizing each angle to a 1e-12 grid (stored values unquantized).
/// Requires Theta to satisfy the model constraints to 1e-9.
TorusPoint canonicalize(const GroupModel& model, const TorusPoint& theta);

void check_constraints(const GroupModel& model, const TorusPoint& theta);

struct QuotientPoint {
  GroupModel model;
  TorusPoint theta;  // canonical representative
};

QuotientPoint make_quotient_point(GroupModel model, const TorusPoint& theta);
QuotientPoint act_on_quotient(const QuotientPoint& q, const IntMatrix& m);

/// (torus dimension of X^0 = rank * r, Weyl order).
std::pair<std::size_t, std::size_t> identity_component_dims(const GroupModel& model,
                                                            std::size_t r);

}  // namespace charvar
