#ifndef COXTODA_RATIONAL_HPP
#define COXTODA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coxtoda {

using Rational = mpq_class;

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  long n = e > 0 ? e : -e;
  Rational out(1);
  while (n > 0) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational rational_parse(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// Rank of a rational matrix by Gaussian elimination.
inline int rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace coxtoda

#endif
