#include "charvar/int_matrix.hpp"

#include <cctype>
#include <sstream>

namespace charvar {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  IntMatrix m(nr, nc);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw DimensionError("from_rows: ragged rows");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
  if (!square()) throw DimensionError("pow: matrix not square");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Integer IntMatrix::trace() const {
  if (!square()) throw DimensionError("trace: matrix not square");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Integer IntMatrix::det() const {
  if (!square()) throw DimensionError("det: matrix not square");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss: fraction-free elimination, every division exact.
  IntMatrix a = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  Integer d = a.at(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

bool IntMatrix::is_unimodular() const {
  if (!square()) return false;
  Integer d = det();
  return d == 1 || d == -1;
}

namespace {

Integer minor_det(const IntMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  IntMatrix sub(n - 1, n - 1);
  std::size_t si = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    std::size_t sj = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == skip_col) continue;
      sub.at(si, sj++) = m.at(i, j);
    }
    ++si;
  }
  return sub.det();
}

}  // namespace

IntMatrix IntMatrix::unimodular_inverse() const {
  if (!square()) throw DimensionError("inverse: matrix not square");
  Integer d = det();
  if (d != 1 && d != -1)
    throw NotAutomorphismError("inverse: |det| != 1 (det = " + d.get_str() + ")");
  const std::size_t n = rows_;
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer c = minor_det(*this, j, i);  // adjugate: transposed cofactors
      if ((i + j) % 2 == 1) c = -c;
      inv.at(i, j) = (d == 1) ? c : Integer(-c);
    }
  }
  return inv;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product: inner dimensions disagree");
  IntMatrix c(a.rows(), b.cols());
  Integer acc, tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (std::size_t l = 0; l < a.cols(); ++l) {
        tmp = a.at(i, l) * b.at(l, j);
        acc += tmp;
      }
      c.at(i, j) = acc;
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix sum: dimensions disagree");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference: dimensions disagree");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

IntMatrix operator*(const Integer& c, const IntMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = c * a.at(i, j);
  return m;
}

IntMatrix parse_int_matrix(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

  std::size_t pos = 0;
  auto expect = [&](char ch) {
    if (pos >= s.size() || s[pos] != ch)
      throw ValidationError("matrix parse: expected '" + std::string(1, ch) +
                            "' at offset " + std::to_string(pos) + " in \"" +
                            std::string(text) + "\"");
    ++pos;
  };

  expect('[');
  std::vector<std::vector<Integer>> rows;
  while (pos < s.size() && s[pos] == '[') {
    ++pos;
    std::vector<Integer> row;
    while (pos < s.size() && s[pos] != ']') {
      std::size_t start = pos;
      if (s[pos] == '-' || s[pos] == '+') ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ValidationError("matrix parse: non-integer token in \"" + std::string(text) + "\"");
      row.emplace_back(s.substr(start, pos - start));
      if (pos < s.size() && s[pos] == ',') ++pos;
    }
    expect(']');
    if (row.empty()) throw ValidationError("matrix parse: empty row");
    rows.push_back(std::move(row));
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  expect(']');
  if (pos != s.size()) throw ValidationError("matrix parse: trailing characters");
  if (rows.empty()) throw ValidationError("matrix parse: no rows");

  const std::size_t nc = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != nc) throw ValidationError("matrix parse: ragged rows");

  IntMatrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = std::move(rows[i][j]);
  return m;
}

}  // namespace charvar
