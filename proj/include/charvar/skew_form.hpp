#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charvar/int_matrix.hpp"

namespace charvar {

bool is_prime(unsigned p);
unsigned mod_inverse(unsigned a, unsigned p);

/// Square matrix over Z_p.
struct FpMatrix {
  std::size_t n = 0;
  unsigned p = 2;
  std::vector<unsigned> v;  // row-major residues

  FpMatrix() = default;
  FpMatrix(std::size_t n_, unsigned p_) : n(n_), p(p_), v(n_ * n_, 0) {}
  static FpMatrix identity(std::size_t n, unsigned p);
  static FpMatrix from_int_matrix(const IntMatrix& m, unsigned p);

  unsigned at(std::size_t i, std::size_t j) const { return v[i * n + j]; }
  unsigned& at(std::size_t i, std::size_t j) { return v[i * n + j]; }
  FpMatrix transpose() const;
  unsigned det() const;  // Gaussian elimination mod p
  bool operator==(const FpMatrix& o) const { return n == o.n && p == o.p && v == o.v; }
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);

/// Skew-symmetric r x r matrix over Z_p: Z_ij = -Z_ji, zero diagonal (the
/// diagonal vanishes in every characteristic, including 2).
class SkewFormFp {
 public:
  SkewFormFp() = default;
  SkewFormFp(std::size_t r, unsigned p);  // zero form
  static SkewFormFp from_entries(std::size_t r, unsigned p, std::vector<unsigned> entries);

  std::size_t dim() const { return r_; }
  unsigned modulus() const { return p_; }
  unsigned at(std::size_t i, std::size_t j) const { return e_[i * r_ + j]; }
  void set_pair(std::size_t i, std::size_t j, unsigned v);  // Z_ij = v, Z_ji = -v
  bool is_zero() const;

  /// Upper-triangle residues, row-major: total order and hash key.
  std::vector<unsigned> key() const;

  bool operator==(const SkewFormFp& o) const {
    return r_ == o.r_ && p_ == o.p_ && e_ == o.e_;
  }
  std::string to_string() const;

 private:
  std::size_t r_ = 0;
  unsigned p_ = 2;
  std::vector<unsigned> e_;
};

/// Completion of a skew form from its first two rows. Requires row1[0] = 0,
/// row2[1] = 0, row2[0] = -row1[1]. With c = Z_12 != 0 this is the rank-2
/// rule Z_ij = (Z_1i Z_2j - Z_1j Z_2i) / c, i.e. Z = (row1 ^ row2)/c; with
/// c = 0 it is the canonical completion e1 ^ row1 + e2 ^ row2 (rank <= 2
/// whenever any rank-<=2 completion exists, in particular for parallel rows).
SkewFormFp fill_in_from_rows(std::size_t r, unsigned p,
                             const std::vector<unsigned>& row1,
                             const std::vector<unsigned>& row2);

/// Z -> M Z M^t mod p (the convention of the transitivity proof). The integer
/// overload requires |det M| = 1 over Z; the mod-p overload requires
/// det M = +-1 mod p (the image of GL(r, Z)).
SkewFormFp gl_action(const IntMatrix& m, const SkewFormFp& z);
SkewFormFp gl_action(const FpMatrix& m, const SkewFormFp& z);

struct SkewNormalForm {
  SkewFormFp n;  // block-diagonal [[0, a], [-a, 0]] blocks, then zeros
  FpMatrix m;    // det = +-1 mod p, with gl_action(m, z) == n
};

/// Symplectic Gaussian elimination over Z_p (valid in characteristic 2 since
/// the diagonal is zero by the type invariant).
SkewNormalForm skew_normal_form(const SkewFormFp& z);

/// Gaussian rank of the form as a matrix over Z_p.
unsigned skew_rank(const SkewFormFp& z);

/// All nonzero rank-<=2 skew forms: the m = 1 exotic-component model
/// (scalar * 2-subspace, enumerated over echelon bases). Cap on the output.
std::vector<SkewFormFp> enumerate_components(std::size_t r, unsigned p,
                                             std::size_t cap = 1000000);

/// p^((m-1)(r-2)) (p^r - 1)(p^{r-1} - 1) / (p^2 - 1), exact.
Integer component_count(std::size_t r, std::size_t m, unsigned p);

/// Orbits of the nonzero components under the image of GL(r, Z) in
/// GL(r, Z_p) — the det = +-1 subgroup, generated by the elementary
/// transvections E_ij(1) and diag(-1, 1, ..., 1). Sorted by size.
std::vector<std::vector<SkewFormFp>> orbit_partition(
    std::size_t r, unsigned p, const std::vector<FpMatrix>* generators = nullptr,
    std::size_t cap = 1000000);

}  // namespace charvar
