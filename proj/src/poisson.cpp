#include "coxtoda/poisson.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxtoda {

int PoissonStructure::index_of(const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end())
    throw std::invalid_argument("variable not in Poisson structure: " + name);
  return static_cast<int>(it - variables.begin());
}

void PoissonStructure::set(int a, int b, const Rational& value) {
  pi[a][b] = value;
  pi[b][a] = -value;
}

bool PoissonStructure::is_antisymmetric() const {
  for (size_t a = 0; a < pi.size(); ++a)
    for (size_t b = 0; b < pi.size(); ++b)
      if (pi[a][b] != -pi[b][a]) return false;
  return true;
}

namespace {

// [i >_sigma k >_tau i] - [i >_tau k >_sigma i]
int order_indicator(int i, int k, const Permutation& sigma,
                    const Permutation& tau) {
  int first = (order_before(k, i, sigma) && order_before(i, k, tau)) ? 1 : 0;
  int second = (order_before(k, i, tau) && order_before(i, k, sigma)) ? 1 : 0;
  return first - second;
}

}  // namespace

PoissonStructure reduced_structure(const Permutation& sigma,
                                   const Permutation& tau,
                                   const CartanData& data) {
  if (!data.is_affine())
    throw std::invalid_argument("reduced_structure requires affine data");
  const int r = data.rank();
  if (!is_permutation(sigma, r + 1) || !is_permutation(tau, r + 1))
    throw std::invalid_argument("sigma/tau must be permutations of {0..r}");

  PoissonStructure ps;
  for (int i = 0; i <= r; ++i)
    ps.variables.push_back("T" + std::to_string(i));
  for (int i = 0; i <= r; ++i)
    ps.variables.push_back("S" + std::to_string(i));
  ps.variables.push_back("Q");
  const int n = 2 * (r + 1) + 1;
  ps.pi.assign(n, std::vector<Rational>(n, Rational(0)));

  auto t_idx = [&](int i) { return i; };
  auto s_idx = [&](int i) { return r + 1 + i; };
  const int q_idx = 2 * (r + 1);

  for (int i = 0; i <= r; ++i) {
    ps.set(s_idx(i), t_idx(i), 2 * data.d(i));
    ps.set(q_idx, t_idx(i), data.d(i) * Rational(data.mark(i)));
  }
  for (int i = 0; i <= r; ++i) {
    for (int k = 0; k < i; ++k) {
      int ind = order_indicator(i, k, sigma, tau);
      if (ind != 0)
        ps.set(s_idx(i), s_idx(k),
               2 * data.d(k) * Rational(data.entry(k, i)) * Rational(ind));
    }
  }
  for (int k = 0; k <= r; ++k) {
    Rational coeff(0);
    for (int i = 0; i <= r; ++i) {
      if (i == k) continue;
      coeff += Rational(data.mark(i)) * data.d(k) *
               Rational(data.entry(k, i)) *
               Rational(order_indicator(i, k, sigma, tau));
    }
    if (coeff != 0) ps.set(q_idx, s_idx(k), coeff);
  }
  return ps;
}

MultiLaurent bracket(const MultiLaurent& f, const MultiLaurent& g,
                     const PoissonStructure& ps) {
  const size_t n = ps.variables.size();
  // Map positions of f/g variables into the structure's variable list.
  auto positions = [&](const MultiLaurent& h) {
    std::vector<int> pos;
    for (const auto& v : h.variables()) pos.push_back(ps.index_of(v));
    return pos;
  };
  std::vector<int> fpos = positions(f), gpos = positions(g);

  MultiLaurent out;
  for (const auto& [ka, ca] : f.terms()) {
    std::vector<Rational> alpha(n, Rational(0));
    for (size_t i = 0; i < ka.size(); ++i) alpha[fpos[i]] = ka[i];
    for (const auto& [kb, cb] : g.terms()) {
      Rational s(0);
      for (size_t j = 0; j < kb.size(); ++j) {
        if (kb[j] == 0) continue;
        const int b = gpos[j];
        Rational row(0);
        for (size_t a = 0; a < n; ++a)
          if (alpha[a] != 0 && ps.pi[a][b] != 0) row += ps.pi[a][b] * alpha[a];
        s += row * Rational(kb[j]);
      }
      if (s == 0) continue;
      // {x^alpha, x^beta} = (alpha . pi . beta) x^{alpha + beta}
      std::vector<std::pair<std::string, int>> factors;
      for (size_t i = 0; i < ka.size(); ++i)
        if (ka[i] != 0) factors.emplace_back(f.variables()[i], ka[i]);
      for (size_t j = 0; j < kb.size(); ++j)
        if (kb[j] != 0) factors.emplace_back(g.variables()[j], kb[j]);
      out += MultiLaurent::monomial(s * ca * cb, factors);
    }
  }
  return out;
}

MultiLaurent casimir(const CartanData& data) {
  if (!data.is_affine())
    throw std::invalid_argument("casimir requires affine data");
  std::vector<std::pair<std::string, int>> factors = {{"Q", 2}};
  for (int k = 0; k <= data.rank(); ++k)
    factors.emplace_back("S" + std::to_string(k),
                         -static_cast<int>(data.mark(k)));
  return MultiLaurent::monomial(Rational(1), factors);
}

bool casimir_check(const MultiLaurent& candidate, const PoissonStructure& ps) {
  for (const auto& name : ps.variables) {
    if (!bracket(candidate, MultiLaurent::variable(name), ps).is_zero())
      return false;
  }
  return true;
}

int leaf_rank(const PoissonStructure& ps) { return rational_rank(ps.pi); }

namespace {

using Mat2 = std::array<std::array<Rational, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Mat2 inverse_det1(const Mat2& g) {
  return {{{g[1][1], -g[0][1]}, {-g[1][0], g[0][0]}}};
}

Rational det(const Mat2& g) {
  return g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

}  // namespace

std::array<std::array<Rational, 4>, 4> sl2_structure(const Mat2& g,
                                                     const Rational& d) {
  const Rational A = g[0][0], B = g[0][1], C = g[1][0], D = g[1][1];
  std::array<std::array<Rational, 4>, 4> table{};
  auto set = [&](int a, int b, const Rational& v) {
    table[a][b] = v;
    table[b][a] = -v;
  };
  // Entry functions indexed A=0, B=1, C=2, D=3.
  set(1, 0, d * A * B);
  set(1, 3, -d * B * D);
  set(1, 2, Rational(0));
  set(2, 0, d * A * C);
  set(2, 3, -d * C * D);
  set(3, 0, 2 * d * B * C);
  return table;
}

bool rmatrix_bracket_check(const Mat2& g, const Rational& d) {
  if (det(g) != 1)
    throw std::invalid_argument("rmatrix_bracket_check requires det 1");
  const Mat2 H = {{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}};
  const Mat2 X = {{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}};
  const Mat2 Y = {{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
  const Mat2 ginv = inverse_det1(g);
  auto ad = [&](const Mat2& m) { return mul(mul(g, m), ginv); };

  // r = d(1/2 H (x) H + 2 X (x) Y); bivector w = Ad_g(r) - r.
  struct TensorTerm {
    Mat2 left, right;
    Rational coeff;
  };
  std::vector<TensorTerm> w = {
      {ad(H), ad(H), d / 2},
      {ad(X), ad(Y), 2 * d},
      {H, H, -d / 2},
      {X, Y, -2 * d},
  };

  // {f_a, f_b}(g) = sum_m c_m (L_m g)_a (R_m g)_b over right-trivialized
  // entry differentials.
  auto entry = [&](const Mat2& m, int flat) { return m[flat / 2][flat % 2]; };
  std::array<std::array<Rational, 4>, 4> computed{};
  for (const auto& term : w) {
    const Mat2 lg = mul(term.left, g), rg = mul(term.right, g);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        computed[a][b] += term.coeff * entry(lg, a) * entry(rg, b);
  }
  return computed == sl2_structure(g, d);
}

}  // namespace coxtoda
