#include "charvar/spectral.hpp"

#include <algorithm>

namespace charvar {

IntPoly char_poly(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("char_poly: matrix not square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: coefficients come out as exact integers, every
  // division by k exact.
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix b = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix a = m * b;
    Integer t = a.trace();
    Integer ck;
    Integer kk(static_cast<long>(k));
    mpz_divexact(ck.get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -ck;
    if (k < n) {
      b = a;
      for (std::size_t i = 0; i < n; ++i) b.at(i, i) += c[n - k];
    }
  }
  return IntPoly(std::move(c));
}

namespace {

// Phi_d can divide a degree-r polynomial only when phi(d) <= r; phi(d) >=
// sqrt(d/2) for d > 6 makes d <= max(6, 2r^2) exhaustive.
unsigned long cyclotomic_bound(std::size_t r) {
  unsigned long rr = static_cast<unsigned long>(r);
  return std::max<unsigned long>(6, 2 * rr * rr);
}

bool divides(const IntPoly& den, const IntPoly& num) {
  if (num.degree() < den.degree()) return false;
  try {
    divide_exact(num, den);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace

RootOfUnityResult has_root_of_unity_eigenvalue(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("has_root_of_unity_eigenvalue: matrix not square");
  const IntPoly p = char_poly(m);
  const std::size_t r = m.rows();
  for (unsigned long d = 1; d <= cyclotomic_bound(r); ++d) {
    if (euler_totient(d) > r) continue;
    if (divides(cyclotomic(d), p)) return {true, d};
  }
  return {false, 0};
}

SpectralClass spectral_classify(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("spectral_classify: matrix not square");
  Integer d = m.det();
  if (d != 1 && d != -1)
    throw NotAutomorphismError("spectral_classify: |det| != 1 (det = " + d.get_str() + ")");

  const IntPoly p = char_poly(m);
  SpectralClass out;

  RootOfUnityResult rou = has_root_of_unity_eigenvalue(m);
  out.has_root_of_unity_eigenvalue = rou.found;
  if (rou.found) out.witness = "d=" + std::to_string(rou.d);

  // Unit-modulus eigenvalues are roots of both p and its reversal (real
  // coefficients pair lambda with conj(lambda) = 1/lambda on the circle).
  bool unit = (p.eval(1) == 0) || (p.eval(-1) == 0);
  if (!unit) {
    IntPoly g = poly_gcd(p, p.reversed());
    // p(+-1) != 0 forces g(+-1) != 0, so the self-reciprocal part has even
    // degree and the y = x + 1/x substitution applies directly.
    if (g.degree() > 0) {
      IntPoly q = symmetric_reduce(g);
      int circle_roots = sturm_count_open(q, Integer(-2), Integer(2));
      if (circle_roots > 0) {
        unit = true;
        if (out.witness.empty())
          out.witness = "unit-circle factor: " + g.to_string();
      }
    }
  }
  out.has_unit_modulus_eigenvalue = unit;
  out.hyperbolic = !unit;
  return out;
}

IntMatrix symplectic_form(std::size_t n) {
  IntMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.at(i, n + i) = 1;
    j.at(n + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("is_symplectic: matrix not square");
  if (m.rows() % 2 != 0) throw DimensionError("is_symplectic: odd dimension");
  IntMatrix j = symplectic_form(m.rows() / 2);
  return m.transpose() * j * m == j;
}

}  // namespace charvar
