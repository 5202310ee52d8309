#pragma once

#include <optional>
#include <string>

#include "charvar/int_matrix.hpp"
#include "charvar/int_poly.hpp"

namespace charvar {

struct RootOfUnityResult {
  bool found = false;
  unsigned long d = 0;  // smallest cyclotomic index, valid iff found
};

/// Exact spectral classification of an integer automorphism.
///   hyperbolic            => no eigenvalue on the unit circle
///   root-of-unity witness => "d=<k>"
///   unit-modulus, no root of unity (Salem type) => the self-reciprocal factor
struct SpectralClass {
  bool has_root_of_unity_eigenvalue = false;
  bool has_unit_modulus_eigenvalue = false;
  bool hyperbolic = false;
  std::string witness;
};

/// det(xI - M) with exact integer coefficients (Faddeev-LeVerrier).
IntPoly char_poly(const IntMatrix& m);

/// True iff char_poly(m) shares a root with some cyclotomic polynomial; the
/// witness is the smallest such index d. Exhaustive over d <= max(6, 2r^2)
/// (phi(d) <= r is necessary and phi(d) >= sqrt(d/2) for d > 6).
RootOfUnityResult has_root_of_unity_eigenvalue(const IntMatrix& m);

/// Exact unit-circle test: unit-modulus eigenvalues are confined to
/// g = gcd(p, reversed(p)); x = +-1 handled directly, the rest through the
/// substitution y = x + 1/x and a Sturm count on (-2, 2). Requires |det| = 1.
SpectralClass spectral_classify(const IntMatrix& m);

/// M^t J M == J for the standard form J of the pairing a1.b2 - a2.b1.
bool is_symplectic(const IntMatrix& m);

/// The 2n x 2n matrix of that pairing: [[0, I], [-I, 0]].
IntMatrix symplectic_form(std::size_t n);

}  // namespace charvar
