#include "toric/numeric.hpp"

#include <stdexcept>
#include <utility>

namespace toric {

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

// Fraction-free forward elimination. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(IntMatrix& m, int& sign) {
  sign = 1;
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  int sign = 1;
  if (bareiss(m, sign) < n) return 0;
  return sign * m[n - 1][n - 1];
}

std::size_t rank(IntMatrix m) {
  int sign = 1;
  return bareiss(m, sign);
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  Integer z(text[0] == '+' ? text.substr(1) : text, 10);
  return z;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace toric
