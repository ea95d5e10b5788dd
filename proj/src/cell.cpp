#include "coxtoda/cell.hpp"

#include <stdexcept>

namespace coxtoda {

namespace {

std::string indexed(const char* base, int i) {
  return std::string(base) + std::to_string(i);
}

void require_setup(const Permutation& sigma, const Permutation& tau,
                   const CartanData& data, int r) {
  if (!data.is_affine())
    throw std::invalid_argument("cell operations require affine Cartan data");
  if (data.rank() != r)
    throw std::invalid_argument("coordinate rank does not match Cartan data");
  if (!is_permutation(sigma, r + 1) || !is_permutation(tau, r + 1))
    throw std::invalid_argument("sigma/tau must be permutations of {0..r}");
}

void check_entry(const MultiLaurent& f, const char* what) {
  if (f.is_zero())
    throw std::domain_error(std::string(what) + " coordinate must be nonzero");
}

}  // namespace

FactorCoords FactorCoords::symbolic(int r) {
  FactorCoords fc;
  for (int i = 0; i <= r; ++i) {
    fc.A.push_back(MultiLaurent::variable(indexed("A", i)));
    fc.B.push_back(MultiLaurent::variable(indexed("B", i)));
    fc.C.push_back(MultiLaurent::variable(indexed("C", i)));
    fc.D.push_back(MultiLaurent::variable(indexed("D", i)));
  }
  return fc;
}

FactorCoords FactorCoords::ones(int r) {
  FactorCoords fc;
  MultiLaurent one(Rational(1));
  for (int i = 0; i <= r; ++i) {
    fc.A.push_back(one);
    fc.B.push_back(one);
    fc.C.push_back(one);
    fc.D.push_back(one);
  }
  return fc;
}

FactorCoords FactorCoords::from_values(const std::vector<Rational>& a,
                                       const std::vector<Rational>& b,
                                       const std::vector<Rational>& c,
                                       const std::vector<Rational>& d) {
  FactorCoords fc;
  for (const Rational& x : a) fc.A.push_back(MultiLaurent(x));
  for (const Rational& x : b) fc.B.push_back(MultiLaurent(x));
  for (const Rational& x : c) fc.C.push_back(MultiLaurent(x));
  for (const Rational& x : d) fc.D.push_back(MultiLaurent(x));
  fc.check_nonzero();
  return fc;
}

void FactorCoords::check_nonzero() const {
  if (A.size() != B.size() || A.size() != C.size() || A.size() != D.size())
    throw std::invalid_argument("coordinate vectors have mismatched lengths");
  for (size_t i = 0; i < A.size(); ++i) {
    check_entry(A[i], "A");
    check_entry(B[i], "B");
    check_entry(C[i], "C");
    check_entry(D[i], "D");
  }
}

ReducedCoords ReducedCoords::symbolic(int r) {
  ReducedCoords rc;
  for (int i = 0; i <= r; ++i) {
    rc.T.push_back(MultiLaurent::variable(indexed("T", i)));
    rc.S.push_back(MultiLaurent::variable(indexed("S", i)));
  }
  rc.Q = MultiLaurent::variable("Q");
  return rc;
}

void ReducedCoords::check_nonzero() const {
  if (T.size() != S.size())
    throw std::invalid_argument("coordinate vectors have mismatched lengths");
  for (size_t i = 0; i < T.size(); ++i) {
    check_entry(T[i], "T");
    check_entry(S[i], "S");
  }
  check_entry(Q, "Q");
}

ReducedCoords reduce(const FactorCoords& fc, const Permutation& sigma,
                     const Permutation& tau, const CartanData& data) {
  const int r = fc.rank();
  require_setup(sigma, tau, data, r);
  fc.check_nonzero();

  std::vector<MultiLaurent> V(r + 1), W(r + 1);
  ReducedCoords rc;
  for (int i = 0; i <= r; ++i) {
    rc.T.push_back(fc.A[i] * fc.D[i].inverse());
    MultiLaurent v = fc.B[i] * fc.D[i];
    for (int k = 0; k <= r; ++k) {
      if (k == i || !order_before(k, i, sigma)) continue;
      v *= fc.D[k].pow(static_cast<int>(data.entry(k, i)));
    }
    V[i] = v;
    MultiLaurent w = fc.A[i].inverse() * fc.C[i];
    for (int k = 0; k <= r; ++k) {
      if (k == i || !order_before(i, k, tau)) continue;
      w *= fc.A[k].pow(-static_cast<int>(data.entry(k, i)));
    }
    W[i] = w;
    rc.S.push_back(V[i] * W[i]);
  }
  rc.Q = V[0];
  for (int i = 1; i <= r; ++i)
    rc.Q *= V[i].pow(static_cast<int>(data.mark(i)));
  return rc;
}

FactorCoords torus_act(const Rational& t, int k, const FactorCoords& fc,
                       const Permutation& sigma, const Permutation& tau,
                       const CartanData& data) {
  const int r = fc.rank();
  require_setup(sigma, tau, data, r);
  if (t == 0) throw std::domain_error("torus parameter must be nonzero");
  if (k < 0 || k > r) throw std::out_of_range("torus index out of range");

  FactorCoords out = fc;
  for (int i = 0; i <= r; ++i) {
    if (i == k) {
      out.A[i] = fc.A[i].scale(t);
      out.B[i] = fc.B[i].scale(Rational(1) / t);
    } else if (order_before(k, i, sigma)) {
      out.B[i] =
          fc.B[i].scale(rational_pow(t, -data.entry(k, i)));
    }
    if (i == k) {
      out.C[i] = fc.C[i].scale(t);
      out.D[i] = fc.D[i].scale(t);
    } else if (order_before(i, k, tau)) {
      // Conjugating the lower leaf scales the strictly triangular entry
      // C_i by the root character t^{C_{ki}} and fixes the diagonal D_i;
      // this is the unique variant under which T, V, W are invariant.
      out.C[i] = fc.C[i].scale(rational_pow(t, data.entry(k, i)));
    }
  }
  return out;
}

FactorCoords gauge_section(const ReducedCoords& rc, const Permutation& sigma,
                           const Permutation& tau, const CartanData& data) {
  const int r = rc.rank();
  require_setup(sigma, tau, data, r);
  rc.check_nonzero();

  FactorCoords fc;
  MultiLaurent one(Rational(1));
  for (int i = 0; i <= r; ++i) {
    fc.A.push_back(rc.T[i]);
    fc.B.push_back(i == 0 ? rc.Q : one);
    fc.D.push_back(one);
    // With D = 1 we have V_i = B_i, so C_i is solved from S_i = V_i W_i.
    MultiLaurent v = (i == 0 ? rc.Q : one);
    MultiLaurent c = rc.S[i] * v.inverse() * rc.T[i];
    for (int k = 0; k <= r; ++k) {
      if (k == i || !order_before(i, k, tau)) continue;
      c *= rc.T[k].pow(static_cast<int>(data.entry(k, i)));
    }
    fc.C.push_back(c);
  }
  return fc;
}

LoopMatrix cell_matrix(const Permutation& sigma, const Permutation& tau,
                       const FactorCoords& fc) {
  const int r = fc.rank();
  const int size = r + 1;
  if (!is_permutation(sigma, size) || !is_permutation(tau, size))
    throw std::invalid_argument("sigma/tau must be permutations of {0..r}");
  LoopMatrix g = LoopMatrix::identity(size);
  for (int j = 0; j <= r; ++j) {
    int i = sigma[j];
    g = g * LoopMatrix::embed_sl2(
                size, i, {fc.A[i], fc.B[i], MultiLaurent(), fc.A[i].inverse()});
  }
  for (int j = 0; j <= r; ++j) {
    int i = tau[j];
    g = g * LoopMatrix::embed_sl2(
                size, i, {fc.D[i].inverse(), MultiLaurent(), fc.C[i], fc.D[i]});
  }
  return g;
}

LoopMatrix x_factorization(const DoubleReducedWord& word,
                           const std::vector<MultiLaurent>& cartan_diag,
                           const std::vector<MultiLaurent>& params) {
  const int size = static_cast<int>(cartan_diag.size());
  if (params.size() != word.letters.size())
    throw std::invalid_argument("one parameter per letter required");
  LoopMatrix g(size);
  for (int i = 0; i < size; ++i) {
    if (cartan_diag[i].is_zero())
      throw std::domain_error("Cartan part must have nonzero entries");
    g.at(i, i) = cartan_diag[i];
  }
  for (size_t j = 0; j < word.letters.size(); ++j)
    g = g * LoopMatrix::one_param(size, word.letters[j], params[j]);
  return g;
}

}  // namespace coxtoda
