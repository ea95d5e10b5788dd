#ifndef COXTODA_CELL_HPP
#define COXTODA_CELL_HPP

#include <vector>

#include "coxtoda/cartan.hpp"
#include "coxtoda/laurent.hpp"
#include "coxtoda/loop_matrix.hpp"
#include "coxtoda/weyl.hpp"

namespace coxtoda {

/*
  Factorization coordinates on the Coxeter cell: per index i, the upper
  leaf entries (A_i, B_i) and the lower leaf entries (C_i, D_i).  Entries
  are Laurent monomials, so they cover both symbolic coordinates and
  nonzero rational points.
*/
struct FactorCoords {
  std::vector<MultiLaurent> A, B, C, D;

  int rank() const { return static_cast<int>(A.size()) - 1; }
  static FactorCoords symbolic(int r);
  static FactorCoords ones(int r);
  static FactorCoords from_values(const std::vector<Rational>& a,
                                  const std::vector<Rational>& b,
                                  const std::vector<Rational>& c,
                                  const std::vector<Rational>& d);
  void check_nonzero() const;
};

struct ReducedCoords {
  std::vector<MultiLaurent> T, S;
  MultiLaurent Q;

  int rank() const { return static_cast<int>(T.size()) - 1; }
  static ReducedCoords symbolic(int r);
  void check_nonzero() const;
  bool operator==(const ReducedCoords& o) const {
    return T == o.T && S == o.S && Q == o.Q;
  }
};

// The invariants T_i = A_i D_i^-1, S_i = V_i W_i, Q = V_0 prod V_i^theta_i.
ReducedCoords reduce(const FactorCoords& fc, const Permutation& sigma,
                     const Permutation& tau, const CartanData& data);

// Action of the k-th residual torus generator with parameter t.
FactorCoords torus_act(const Rational& t, int k, const FactorCoords& fc,
                       const Permutation& sigma, const Permutation& tau,
                       const CartanData& data);

// Section of the torus quotient with D_i = 1, B_i = 1 for i != 0, B_0 = Q,
// A_i = T_i; satisfies reduce(gauge_section(rc)) = rc.
FactorCoords gauge_section(const ReducedCoords& rc, const Permutation& sigma,
                           const Permutation& tau, const CartanData& data);

// Ordered product of the phi factors: upper factors along sigma, then
// lower factors along tau.
LoopMatrix cell_matrix(const Permutation& sigma, const Permutation& tau,
                       const FactorCoords& fc);

// a * x_{i_1}(t_1) ... x_{i_m}(t_m) with a diagonal Cartan part.
LoopMatrix x_factorization(const DoubleReducedWord& word,
                           const std::vector<MultiLaurent>& cartan_diag,
                           const std::vector<MultiLaurent>& params);

}  // namespace coxtoda

#endif
