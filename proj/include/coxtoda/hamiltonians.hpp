#ifndef COXTODA_HAMILTONIANS_HPP
#define COXTODA_HAMILTONIANS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxtoda/cell.hpp"
#include "coxtoda/poisson.hpp"

namespace coxtoda {

struct HamiltonianSet {
  std::vector<MultiLaurent> entries;      // H_1 .. H_{r+1} over (T, S, Q)
  std::vector<std::string> provenance;    // representation / z-power of each
};

// Character of the k-th fundamental representation of the cell matrix in
// the gauge section, as a Laurent polynomial in (T, S, Q, z).
MultiLaurent evaluation_character(int k, const Permutation& sigma,
                                  const Permutation& tau,
                                  const CartanData& data);

// Fundamental index of the dominant W-orbit representative of mu, or
// nullopt when that representative is not a fundamental weight.
std::optional<int> select_v_rep(const Permutation& sigma,
                                const CartanData& data);

// H_k = z^0 coefficient of the k-th fundamental evaluation character for
// k <= r; H_{r+1} = z^1 coefficient of the character selected by mu.
HamiltonianSet hamiltonian_set(const Permutation& sigma,
                               const Permutation& tau, const CartanData& data);

struct CommuteReport {
  struct Pair {
    int i, j;
    bool zero;
  };
  std::vector<Pair> pairs;
  bool all_zero = true;
};

CommuteReport commute_check(const HamiltonianSet& hs,
                            const PoissonStructure& ps);

// Exact rank of the Jacobian of the Hamiltonians at the given point.
int independence_rank(const HamiltonianSet& hs, const PoissonStructure& ps,
                      const std::map<std::string, Rational>& point);

}  // namespace coxtoda

#endif
