#pragma once

#include <string>
#include <vector>

#include "charvar/group_model.hpp"
#include "charvar/int_matrix.hpp"
#include "charvar/spectral.hpp"

namespace charvar {

/// Finitely generated nilpotent groups at the fidelity the dynamics needs:
/// abelianization data plus, for Heisenberg, concrete elements.
struct NilpotentGroupDescriptor {
  enum class Kind { Abelian, FreeNilpotent, Heisenberg };
  Kind kind = Kind::Abelian;
  std::size_t rank = 0;               // abelian free rank / free-nilpotent rank
  std::size_t step = 1;               // free-nilpotent step size
  std::size_t n = 0;                  // Heisenberg H_{2n+1}
  std::vector<Integer> torsion;       // abelian case only, entries >= 2

  /// "H3", "H5", "N:2,3", "Z^3", "Z^2+T:2,4".
  static NilpotentGroupDescriptor parse(const std::string& text);
  std::string to_string() const;
};

/// (a, b, c) with product law (a1+a2, b1+b2, c1+c2+(a1.b2 - a2.b1)).
struct HeisenbergElement {
  std::vector<Integer> a, b;
  Integer c = 0;
};

HeisenbergElement heisenberg_identity(std::size_t n);
HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& x);
bool operator==(const HeisenbergElement& x, const HeisenbergElement& y);

struct AbelianizationData {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

AbelianizationData abelianization_rank(const NilpotentGroupDescriptor& g);

/// The reduction of X^0(Gamma, K) to the free-abelian torus model: torsion is
/// discarded and the dynamics runs on the k x r torus of K.
struct IdentityComponentModel {
  std::size_t r = 0;
  GroupModel k_model;
  std::size_t torus_dimension = 0;  // rank(K) * r
};

IdentityComponentModel identity_component_model(const NilpotentGroupDescriptor& g,
                                                const GroupModel& k);

/// The lift (a, b, c) -> (M(a, b), c) of a symplectic M. Construction checks
/// the symplectic condition and spot-checks the homomorphism property on 100
/// random pairs.
class HeisenbergAutomorphism {
 public:
  explicit HeisenbergAutomorphism(IntMatrix m);
  HeisenbergElement apply(const HeisenbergElement& x) const;
  const IntMatrix& matrix() const { return m_; }
  std::size_t n() const { return m_.rows() / 2; }

 private:
  IntMatrix m_;
};

HeisenbergAutomorphism heisenberg_auto_from_symplectic(const IntMatrix& m);

struct InducedActionReport {
  bool admissible = false;
  std::string admissibility_detail;
  SpectralClass spectral;
  bool mixing_guaranteed = false;  // admissible and no root-of-unity eigenvalue
};

/// Admissibility (symplectic for Heisenberg, |det| = 1 otherwise) plus the
/// spectral classification of the induced map on the abelianization.
InducedActionReport classify_induced_action(const NilpotentGroupDescriptor& g,
                                            const IntMatrix& m);

}  // namespace charvar
