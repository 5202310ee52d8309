#include "charvar/int_poly.hpp"

#include <mutex>
#include <map>
#include <sstream>
#include <stdexcept>

namespace charvar {

namespace {
const Integer kZero = 0;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::x_power(std::size_t k) {
  std::vector<Integer> c(k + 1, Integer(0));
  c[k] = 1;
  return IntPoly(std::move(c));
}

const Integer& IntPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

const Integer& IntPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Integer(static_cast<long>(i)) * c_[i];
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> rev(c_.rbegin(), c_.rend());
  return IntPoly(std::move(rev));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Integer a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) { return Integer(-1) * a; }

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::logic_error("divide_exact: zero divisor");
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree())
    throw std::logic_error("divide_exact: degree of numerator below divisor");
  std::vector<Integer> rem(num.coeffs());
  std::vector<Integer> quo(num.degree() - den.degree() + 1, Integer(0));
  const Integer& lc = den.leading();
  for (std::size_t i = quo.size(); i-- > 0;) {
    Integer& top = rem[i + den.degree()];
    if (top == 0) continue;
    Integer q;
    mpz_fdiv_qr(q.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (top != 0) throw std::logic_error("divide_exact: division not exact");
    quo[i] = q;
    for (int j = 0; j < den.degree(); ++j)
      rem[i + j] -= q * den.coeff(static_cast<std::size_t>(j));
  }
  for (const Integer& v : rem)
    if (v != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return IntPoly(std::move(quo));
}

IntPoly pseudo_rem(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::logic_error("pseudo_rem: zero divisor");
  if (num.degree() < den.degree()) return num;
  std::vector<Integer> r(num.coeffs());
  const Integer& lc = den.leading();
  const int dd = den.degree();
  int dr = num.degree();
  int scalings = 0;  // times r was multiplied by lc
  while (dr >= dd) {
    // r <- lc * r - r[dr] x^{dr-dd} * den
    Integer top = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lc;
    ++scalings;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<std::size_t>(dr - dd + j)] -= top * den.coeff(static_cast<std::size_t>(j));
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(dr + 1));
  // Pad to the full lc^(deg num - deg den + 1) multiplier the identity promises.
  const int delta = num.degree() - dd + 1;
  IntPoly result(std::move(r));
  for (; scalings < delta; ++scalings) result = lc * result;
  return result;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const Integer& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    mpz_divexact(c[i].get_mpz_t(), p.coeff(i).get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return primitive_part(p);
  return divide_exact(primitive_part(p), g);
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  IntMatrix syl(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      syl.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) =
          a.coeff(static_cast<std::size_t>(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      syl.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) =
          b.coeff(static_cast<std::size_t>(n - j));
  return syl.det();
}

unsigned long euler_totient(unsigned long d) {
  unsigned long result = d;
  for (unsigned long q = 2; q * q <= d; ++q) {
    if (d % q == 0) {
      result -= result / q;
      while (d % q == 0) d /= q;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

IntPoly cyclotomic(unsigned long d) {
  static std::mutex mu;
  static std::map<unsigned long, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, computed recursively
  // without recursion by filling the cache upward over divisors of d.
  std::vector<unsigned long> divisors;
  for (unsigned long e = 1; e <= d; ++e)
    if (d % e == 0) divisors.push_back(e);
  for (unsigned long e : divisors) {
    if (cache.count(e)) continue;
    IntPoly num = IntPoly::x_power(e) - IntPoly::from({1});
    IntPoly den = IntPoly::from({1});
    for (unsigned long f : divisors)
      if (f < e && e % f == 0) den = den * cache.at(f);
    cache[e] = divide_exact(num, den);
  }
  return cache.at(d);
}

namespace {

int sign_of(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_changes(const std::vector<IntPoly>& chain, const Integer& x) {
  int changes = 0, prev = 0;
  for (const IntPoly& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int sturm_count_open(const IntPoly& p_in, const Integer& a, const Integer& b) {
  IntPoly p = squarefree_part(p_in);
  if (p.is_zero()) throw std::logic_error("sturm_count_open: zero polynomial");
  if (p.degree() == 0) return 0;
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw std::logic_error("sturm_count_open: root at an endpoint");

  std::vector<IntPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    const IntPoly& s0 = chain[chain.size() - 2];
    const IntPoly& s1 = chain.back();
    IntPoly r = pseudo_rem(s0, s1);
    if (r.is_zero()) break;
    // True remainder is r / lc(s1)^delta; the chain needs -rem up to a
    // positive factor, so flip the sign when lc^delta is negative.
    int delta = s0.degree() - s1.degree() + 1;
    bool lc_pow_negative = (s1.leading() < 0) && (delta % 2 == 1);
    IntPoly next = lc_pow_negative ? r : -r;
    Integer c = content(next);
    std::vector<Integer> reduced(next.coeffs().size());
    for (std::size_t i = 0; i < reduced.size(); ++i)
      mpz_divexact(reduced[i].get_mpz_t(), next.coeff(i).get_mpz_t(), c.get_mpz_t());
    chain.emplace_back(std::move(reduced));
  }
  return sign_changes(chain, a) - sign_changes(chain, b);
}

IntPoly symmetric_reduce(const IntPoly& p) {
  if (p.is_zero() || p.degree() % 2 != 0 || p != p.reversed())
    throw std::logic_error("symmetric_reduce: input not self-reciprocal of even degree");
  const std::size_t m = static_cast<std::size_t>(p.degree()) / 2;
  // C_j(x + 1/x) = x^j + x^{-j}: C_0 = 2, C_1 = y, C_{j+1} = y C_j - C_{j-1}.
  IntPoly y = IntPoly::x_power(1);
  IntPoly cjm1 = IntPoly::from({2});
  IntPoly cj = y;
  IntPoly q = IntPoly(std::vector<Integer>{p.coeff(m)});
  for (std::size_t j = 1; j <= m; ++j) {
    q = q + p.coeff(m + j) * cj;
    IntPoly cnext = y * cj - cjm1;
    cjm1 = std::move(cj);
    cj = std::move(cnext);
  }
  return q;
}

}  // namespace charvar
