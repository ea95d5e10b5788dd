#include "coxtoda/hamiltonians.hpp"

#include <stdexcept>

namespace coxtoda {

namespace {

void require_type_a(const CartanData& data) {
  if (!data.is_affine())
    throw std::invalid_argument("evaluation characters require affine data");
  const CartanData& fin = data.finite_part();
  const int r = fin.size();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long expected = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (fin.entry(i, j) != expected)
        throw std::invalid_argument(
            "evaluation characters are only supported for type A");
    }
}

}  // namespace

MultiLaurent evaluation_character(int k, const Permutation& sigma,
                                  const Permutation& tau,
                                  const CartanData& data) {
  require_type_a(data);
  const int r = data.rank();
  if (k < 1 || k > r)
    throw std::out_of_range("fundamental index out of range");
  ReducedCoords rc = ReducedCoords::symbolic(r);
  LoopMatrix g = cell_matrix(sigma, tau, gauge_section(rc, sigma, tau, data));
  return g.fundamental_char(k);
}

std::optional<int> select_v_rep(const Permutation& sigma,
                                const CartanData& data) {
  const int r = data.rank();
  Weight lambda = mu_weight(sigma, data);
  // Dominance algorithm: reflect at a violated index until dominant.
  for (;;) {
    int neg = -1;
    for (int i = 0; i < r; ++i)
      if (lambda[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    lambda = reflect(lambda, neg + 1, data);
  }
  int fundamental = 0;
  for (int i = 0; i < r; ++i) {
    if (lambda[i] == 0) continue;
    if (lambda[i] != 1 || fundamental != 0) return std::nullopt;
    fundamental = i + 1;
  }
  if (fundamental == 0) return std::nullopt;
  return fundamental;
}

HamiltonianSet hamiltonian_set(const Permutation& sigma,
                               const Permutation& tau, const CartanData& data) {
  const int r = data.rank();
  auto v_rep = select_v_rep(sigma, data);
  if (!v_rep)
    throw std::domain_error(
        "unsupported representation: dominant representative of mu is not "
        "fundamental");

  HamiltonianSet hs;
  for (int k = 1; k <= r; ++k) {
    MultiLaurent chi = evaluation_character(k, sigma, tau, data);
    MultiLaurent h = chi.coeff_in(kLoopVar, 0);
    if (h.is_zero())
      throw std::logic_error("H_" + std::to_string(k) + " vanished");
    hs.entries.push_back(h);
    hs.provenance.push_back("fundamental " + std::to_string(k) +
                            ", z^0 coefficient");
  }
  MultiLaurent chi = evaluation_character(*v_rep, sigma, tau, data);
  MultiLaurent h = chi.coeff_in(kLoopVar, 1);
  if (h.is_zero())
    throw std::logic_error("z-linear Hamiltonian vanished");
  hs.entries.push_back(h);
  hs.provenance.push_back("fundamental " + std::to_string(*v_rep) +
                          ", z^1 coefficient");
  return hs;
}

CommuteReport commute_check(const HamiltonianSet& hs,
                            const PoissonStructure& ps) {
  CommuteReport report;
  const int n = static_cast<int>(hs.entries.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool zero = bracket(hs.entries[i], hs.entries[j], ps).is_zero();
      report.pairs.push_back({i + 1, j + 1, zero});
      if (!zero) report.all_zero = false;
    }
  return report;
}

int independence_rank(const HamiltonianSet& hs, const PoissonStructure& ps,
                      const std::map<std::string, Rational>& point) {
  std::vector<std::vector<Rational>> jac;
  for (const auto& h : hs.entries) {
    std::vector<Rational> row;
    for (const auto& var : ps.variables) {
      if (h.depends_on(var))
        row.push_back(h.partial(var).evaluate(point));
      else
        row.push_back(Rational(0));
    }
    jac.push_back(std::move(row));
  }
  return rational_rank(jac);
}

}  // namespace coxtoda
