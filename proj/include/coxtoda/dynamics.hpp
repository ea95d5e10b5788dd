#ifndef COXTODA_DYNAMICS_HPP
#define COXTODA_DYNAMICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "coxtoda/cell.hpp"
#include "coxtoda/poisson.hpp"

namespace coxtoda {

// Laurent polynomial frozen into double-precision form for evaluation
// along trajectories.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const MultiLaurent& f, const std::vector<std::string>& vars);
  double eval(const std::vector<double>& x) const;

 private:
  struct Term {
    double coeff;
    std::vector<std::pair<int, int>> powers;  // (variable index, exponent)
  };
  std::vector<Term> terms_;
};

struct Trajectory {
  std::vector<std::string> names;
  std::vector<double> times;                 // strictly increasing
  std::vector<std::vector<double>> states;   // one vector per time
  std::string integrator = "rk4";
  double dt = 0;
  std::string hamiltonian_id;
  bool truncated = false;                    // blow-up before t_end
};

// Fixed-step RK4 integration of x'_a = {x_a, H} for a log-canonical
// structure; states recorded every `stride` steps (and at the final step).
Trajectory hamiltonian_flow(const PoissonStructure& ps, const MultiLaurent& H,
                            const std::vector<double>& x0, double dt,
                            double t_end, int stride = 1,
                            const std::string& hamiltonian_id = "H");

struct DriftEntry {
  std::string name;
  double drift;
  bool relative;  // false when f(x(0)) = 0 and absolute drift is reported
};

std::vector<DriftEntry> drift_report(
    const Trajectory& traj,
    const std::vector<std::pair<std::string, MultiLaurent>>& conserved);

// Poisson structure on (c_0..c_m, d_0..d_m) with the cyclic nearest-
// neighbor brackets; contributions are accumulated additively so that at
// m = 1 the two wrap-around c-c terms cancel.
PoissonStructure cd_structure(int m);

struct TodaState {
  std::vector<double> p, q;  // periodic, equal lengths
  double h = 2;
};

// c_i = 4 e^{2p_i - q_i + q_{i+1}}, d_i = e^{2p_i}; only h = 2 supported.
std::pair<std::vector<double>, std::vector<double>> toda_canonical(
    const TodaState& state);

// The monomial map c_i = S_i T_i T_{i-1}^{-1}, d_i = T_i T_{i-1}^{-1}
// (indices mod n+1) applied to reduced coordinates.
std::pair<std::vector<MultiLaurent>, std::vector<MultiLaurent>>
reduce_cell_to_cd(const ReducedCoords& rc);

// The same map with symbolic arguments, as polynomials in (T_i, S_i).
std::pair<std::vector<MultiLaurent>, std::vector<MultiLaurent>>
cell_to_cd_map(int n);

}  // namespace coxtoda

#endif
