#include "coxtoda/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coxtoda {

CompiledPoly::CompiledPoly(const MultiLaurent& f,
                           const std::vector<std::string>& vars) {
  std::vector<int> pos;
  for (const auto& v : f.variables()) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end())
      throw std::invalid_argument("variable not in state: " + v);
    pos.push_back(static_cast<int>(it - vars.begin()));
  }
  for (const auto& [key, c] : f.terms()) {
    Term t;
    t.coeff = c.get_d();
    for (size_t i = 0; i < key.size(); ++i)
      if (key[i] != 0) t.powers.emplace_back(pos[i], key[i]);
    terms_.push_back(std::move(t));
  }
}

double CompiledPoly::eval(const std::vector<double>& x) const {
  double total = 0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (const auto& [idx, e] : t.powers) v *= std::pow(x[idx], e);
    total += v;
  }
  return total;
}

Trajectory hamiltonian_flow(const PoissonStructure& ps, const MultiLaurent& H,
                            const std::vector<double>& x0, double dt,
                            double t_end, int stride,
                            const std::string& hamiltonian_id) {
  const size_t n = ps.variables.size();
  if (x0.size() != n) throw std::invalid_argument("state dimension mismatch");
  if (dt <= 0 || t_end <= 0) throw std::invalid_argument("dt, t_end must be positive");
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");

  // Exact vector field components {x_a, H}, then compiled to doubles.
  std::vector<CompiledPoly> field;
  field.reserve(n);
  for (const auto& var : ps.variables)
    field.emplace_back(bracket(MultiLaurent::variable(var), H, ps),
                       ps.variables);

  auto deriv = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (size_t a = 0; a < n; ++a) out[a] = field[a].eval(x);
  };

  Trajectory traj;
  traj.names = ps.variables;
  traj.dt = dt;
  traj.hamiltonian_id = hamiltonian_id;

  const long steps = std::lround(t_end / dt);
  std::vector<double> x = x0, k1(n), k2(n), k3(n), k4(n), tmp(n);
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  for (long step = 1; step <= steps; ++step) {
    deriv(x, k1);
    for (size_t a = 0; a < n; ++a) tmp[a] = x[a] + 0.5 * dt * k1[a];
    deriv(tmp, k2);
    for (size_t a = 0; a < n; ++a) tmp[a] = x[a] + 0.5 * dt * k2[a];
    deriv(tmp, k3);
    for (size_t a = 0; a < n; ++a) tmp[a] = x[a] + dt * k3[a];
    deriv(tmp, k4);
    for (size_t a = 0; a < n; ++a)
      x[a] += dt / 6.0 * (k1[a] + 2 * k2[a] + 2 * k3[a] + k4[a]);
    bool finite = std::all_of(x.begin(), x.end(),
                              [](double v) { return std::isfinite(v); });
    if (!finite) {
      traj.truncated = true;
      break;
    }
    if (step % stride == 0 || step == steps) {
      traj.times.push_back(step * dt);
      traj.states.push_back(x);
    }
  }
  return traj;
}

std::vector<DriftEntry> drift_report(
    const Trajectory& traj,
    const std::vector<std::pair<std::string, MultiLaurent>>& conserved) {
  std::vector<DriftEntry> out;
  for (const auto& [name, f] : conserved) {
    CompiledPoly cp(f, traj.names);
    const double f0 = cp.eval(traj.states.front());
    double worst = 0;
    for (const auto& state : traj.states)
      worst = std::max(worst, std::abs(cp.eval(state) - f0));
    if (f0 != 0)
      out.push_back({name, worst / std::abs(f0), true});
    else
      out.push_back({name, worst, false});
  }
  return out;
}

PoissonStructure cd_structure(int m) {
  if (m < 1) throw std::invalid_argument("cd_structure requires m >= 1");
  PoissonStructure ps;
  for (int i = 0; i <= m; ++i)
    ps.variables.push_back("c" + std::to_string(i));
  for (int i = 0; i <= m; ++i)
    ps.variables.push_back("d" + std::to_string(i));
  const int n = 2 * (m + 1);
  ps.pi.assign(n, std::vector<Rational>(n, Rational(0)));
  auto c_idx = [&](int i) { return i % (m + 1); };
  auto d_idx = [&](int i) { return m + 1 + i % (m + 1); };
  auto add = [&](int a, int b, long v) {
    ps.pi[a][b] += v;
    ps.pi[b][a] -= v;
  };
  for (int k = 0; k <= m; ++k) {
    add(c_idx(k), d_idx(k), 2);
    add(c_idx(k), d_idx(k + 1), -2);
    add(c_idx(k), c_idx(k + 1), -2);
  }
  return ps;
}

std::pair<std::vector<double>, std::vector<double>> toda_canonical(
    const TodaState& state) {
  if (state.h != 2)
    throw std::invalid_argument("only h = 2 is supported");
  if (state.p.size() != state.q.size() || state.p.empty())
    throw std::invalid_argument("p and q must be nonempty of equal length");
  const size_t m1 = state.p.size();
  std::vector<double> c(m1), d(m1);
  for (size_t i = 0; i < m1; ++i) {
    size_t next = (i + 1) % m1;
    c[i] = 4 * std::exp(2 * state.p[i] - state.q[i] + state.q[next]);
    d[i] = std::exp(2 * state.p[i]);
  }
  return {c, d};
}

std::pair<std::vector<MultiLaurent>, std::vector<MultiLaurent>>
reduce_cell_to_cd(const ReducedCoords& rc) {
  rc.check_nonzero();
  const int n = rc.rank();
  std::vector<MultiLaurent> c, d;
  for (int i = 0; i <= n; ++i) {
    int prev = (i + n) % (n + 1);
    MultiLaurent ratio = rc.T[i] * rc.T[prev].inverse();
    c.push_back(rc.S[i] * ratio);
    d.push_back(ratio);
  }
  return {c, d};
}

std::pair<std::vector<MultiLaurent>, std::vector<MultiLaurent>>
cell_to_cd_map(int n) {
  return reduce_cell_to_cd(ReducedCoords::symbolic(n));
}

}  // namespace coxtoda
