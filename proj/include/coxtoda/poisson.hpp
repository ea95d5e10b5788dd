#ifndef COXTODA_POISSON_HPP
#define COXTODA_POISSON_HPP

#include <array>
#include <string>
#include <vector>

#include "coxtoda/cartan.hpp"
#include "coxtoda/laurent.hpp"
#include "coxtoda/weyl.hpp"

namespace coxtoda {

/*
  Log-canonical Poisson structure {x_a, x_b} = pi_ab x_a x_b with constant
  antisymmetric rational pi.  Jacobi holds structurally for brackets of
  this form.
*/
struct PoissonStructure {
  std::vector<std::string> variables;
  std::vector<std::vector<Rational>> pi;

  int index_of(const std::string& name) const;
  void set(int a, int b, const Rational& value);  // also fills -value at (b,a)
  bool is_antisymmetric() const;
};

// The reduced-cell structure over (T_0..T_r, S_0..S_r, Q).
PoissonStructure reduced_structure(const Permutation& sigma,
                                   const Permutation& tau,
                                   const CartanData& data);

// {f, g} = sum_ab pi_ab x_a x_b (d_a f)(d_b g), evaluated exactly.
MultiLaurent bracket(const MultiLaurent& f, const MultiLaurent& g,
                     const PoissonStructure& ps);

// Q^2 prod_k S_k^{-theta_k}.
MultiLaurent casimir(const CartanData& data);

// True iff the candidate brackets to zero with every coordinate.
bool casimir_check(const MultiLaurent& candidate, const PoissonStructure& ps);

// Rank of pi over the rationals; generic symplectic leaf dimension.
int leaf_rank(const PoissonStructure& ps);

// Expected bracket table of SL_2^(d) on the entry functions A,B,C,D,
// indexed by flattened entry positions (0..3) x (0..3).  Entry (a,b) holds
// the value of {f_a, f_b} at g.
std::array<std::array<Rational, 4>, 4> sl2_structure(
    const std::array<std::array<Rational, 2>, 2>& g, const Rational& d);

// Evaluates the r-matrix bivector Ad_g(r) - r against right-trivialized
// differentials of the entry functions and compares with sl2_structure.
bool rmatrix_bracket_check(const std::array<std::array<Rational, 2>, 2>& g,
                           const Rational& d);

}  // namespace coxtoda

#endif
