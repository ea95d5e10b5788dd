// Command-line front end: affine Cartan data, bracket tables, Hamiltonian
// verification, and numerical flows, with JSON/CSV reports.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "coxtoda/json_io.hpp"

using namespace coxtoda;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct JobConfig {
  std::string type = "A1";
  std::string sigma_csv, tau_csv;
  std::string hamiltonian = "H1";
  double dt = 1e-3;
  double t_end = 10.0;
  int stride = 1;
  unsigned seed = 1;
  double tol = 1e-8;
  int points = 10;
  std::string out_dir;
  std::string config_path;
  bool json_out = false;
};

Permutation parse_perm_csv(const std::string& csv, int size) {
  Permutation perm;
  if (csv.empty()) {
    for (int i = 0; i < size; ++i) perm.push_back(i);
    return perm;
  }
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) perm.push_back(std::stoi(item));
  if (!is_permutation(perm, size))
    throw CLI::ValidationError("--sigma/--tau",
                               "not a permutation of {0..r}");
  return perm;
}

void apply_config_file(JobConfig& cfg, CLI::App* cmd) {
  if (cfg.config_path.empty()) return;
  std::ifstream in(cfg.config_path);
  if (!in) throw CLI::ValidationError("--config", "cannot open file");
  json j = json::parse(in);
  auto maybe = [&](const char* flag, auto& field) {
    std::string key = flag + 2;  // strip leading "--"
    if (j.contains(key) && cmd->count(flag) == 0)
      field = j.at(key).template get<std::decay_t<decltype(field)>>();
  };
  maybe("--type", cfg.type);
  maybe("--sigma", cfg.sigma_csv);
  maybe("--tau", cfg.tau_csv);
  maybe("--hamiltonian", cfg.hamiltonian);
  maybe("--dt", cfg.dt);
  maybe("--t-end", cfg.t_end);
  maybe("--stride", cfg.stride);
  maybe("--seed", cfg.seed);
  maybe("--tol", cfg.tol);
  maybe("--points", cfg.points);
  maybe("--out", cfg.out_dir);
}

void emit(const JobConfig& cfg, const std::string& name, const json& report) {
  std::string text = report.dump(2);
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream out(std::filesystem::path(cfg.out_dir) / (name + ".json"));
    out << text << "\n";
  }
  std::cout << text << "\n";
}

void write_csv(const JobConfig& cfg, const std::string& name,
               const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    file.open(std::filesystem::path(cfg.out_dir) / (name + ".csv"));
    out = &file;
  }
  (*out) << header << "\n";
  std::ostringstream line;
  line.precision(17);
  for (const auto& row : rows) {
    line.str("");
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line << ",";
      line << row[i];
    }
    (*out) << line.str() << "\n";
  }
}

std::map<std::string, Rational> random_point(
    const std::vector<std::string>& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 12);
  std::map<std::string, Rational> point;
  for (const auto& v : vars) point[v] = Rational(num(rng), den(rng));
  return point;
}

int hamiltonian_index(const std::string& id, int count) {
  if (id.size() < 2 || (id[0] != 'H' && id[0] != 'h'))
    throw CLI::ValidationError("--hamiltonian", "expected H1..H" +
                                                    std::to_string(count));
  int k = std::stoi(id.substr(1));
  if (k < 1 || k > count)
    throw CLI::ValidationError("--hamiltonian", "index out of range");
  return k - 1;
}

int run_cartan(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  emit(cfg, "cartan", cartan_to_json(data));
  return kExitPass;
}

int run_mu_check(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  Permutation sigma = parse_perm_csv(cfg.sigma_csv, data.size());
  MuChainReport report = check_mu_fixed(sigma, data);
  emit(cfg, "mu-check", mu_report_to_json(report));
  return report.ok ? kExitPass : kExitMathFailure;
}

int run_brackets(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  Permutation sigma = parse_perm_csv(cfg.sigma_csv, data.size());
  Permutation tau = parse_perm_csv(cfg.tau_csv, data.size());
  emit(cfg, "brackets",
       structure_to_json(reduced_structure(sigma, tau, data)));
  return kExitPass;
}

int run_leaf_rank(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  Permutation sigma = parse_perm_csv(cfg.sigma_csv, data.size());
  Permutation tau = parse_perm_csv(cfg.tau_csv, data.size());
  PoissonStructure ps = reduced_structure(sigma, tau, data);
  int rank = leaf_rank(ps);
  int expected = 2 * data.rank() + 2;
  bool casimir_ok = casimir_check(casimir(data), ps);
  emit(cfg, "leaf-rank", {{"rank", rank},
                          {"expected", expected},
                          {"casimir", casimir(data).str()},
                          {"casimir_ok", casimir_ok}});
  return (rank == expected && casimir_ok) ? kExitPass : kExitMathFailure;
}

int run_hamiltonians(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  Permutation sigma = parse_perm_csv(cfg.sigma_csv, data.size());
  Permutation tau = parse_perm_csv(cfg.tau_csv, data.size());
  HamiltonianSet hs = hamiltonian_set(sigma, tau, data);
  emit(cfg, "hamiltonians", hamiltonians_to_json(hs));
  return kExitPass;
}

int run_commute(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  Permutation sigma = parse_perm_csv(cfg.sigma_csv, data.size());
  Permutation tau = parse_perm_csv(cfg.tau_csv, data.size());
  HamiltonianSet hs = hamiltonian_set(sigma, tau, data);
  PoissonStructure ps = reduced_structure(sigma, tau, data);
  CommuteReport report = commute_check(hs, ps);
  emit(cfg, "commute", commute_report_to_json(report));
  return report.all_zero ? kExitPass : kExitMathFailure;
}

int run_independence(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  Permutation sigma = parse_perm_csv(cfg.sigma_csv, data.size());
  Permutation tau = parse_perm_csv(cfg.tau_csv, data.size());
  HamiltonianSet hs = hamiltonian_set(sigma, tau, data);
  PoissonStructure ps = reduced_structure(sigma, tau, data);
  std::mt19937_64 rng(cfg.seed);
  int full = 0;
  const int expected = data.rank() + 1;
  json samples = json::array();
  for (int trial = 0; trial < cfg.points; ++trial) {
    int rank = independence_rank(hs, ps, random_point(ps.variables, rng));
    samples.push_back(rank);
    if (rank == expected) ++full;
  }
  bool ok = full * 10 >= cfg.points * 9;
  emit(cfg, "independence", {{"expected_rank", expected},
                             {"ranks", samples},
                             {"full_rank_points", full},
                             {"points", cfg.points},
                             {"ok", ok}});
  return ok ? kExitPass : kExitMathFailure;
}

int run_simulate(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  Permutation sigma = parse_perm_csv(cfg.sigma_csv, data.size());
  Permutation tau = parse_perm_csv(cfg.tau_csv, data.size());
  HamiltonianSet hs = hamiltonian_set(sigma, tau, data);
  PoissonStructure ps = reduced_structure(sigma, tau, data);
  int h_idx = hamiltonian_index(cfg.hamiltonian,
                                static_cast<int>(hs.entries.size()));

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> init(0.5, 2.0);
  std::vector<double> x0(ps.variables.size());
  for (double& v : x0) v = init(rng);

  Trajectory traj = hamiltonian_flow(ps, hs.entries[h_idx], x0, cfg.dt,
                                     cfg.t_end, cfg.stride, cfg.hamiltonian);

  std::vector<std::pair<std::string, MultiLaurent>> conserved;
  for (size_t i = 0; i < hs.entries.size(); ++i)
    conserved.emplace_back("H" + std::to_string(i + 1), hs.entries[i]);
  conserved.emplace_back("casimir", casimir(data));
  auto drifts = drift_report(traj, conserved);

  std::string header = "t";
  for (const auto& name : traj.names) header += "," + name;
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < traj.times.size(); ++i) {
    std::vector<double> row = {traj.times[i]};
    row.insert(row.end(), traj.states[i].begin(), traj.states[i].end());
    rows.push_back(std::move(row));
  }
  write_csv(cfg, "trajectory", header, rows);

  double max_drift = 0;
  for (const auto& d : drifts) max_drift = std::max(max_drift, d.drift);
  bool ok = !traj.truncated && max_drift <= cfg.tol;
  emit(cfg, "drift", {{"drift", drift_to_json(drifts)},
                      {"max_drift", max_drift},
                      {"tolerance", cfg.tol},
                      {"truncated", traj.truncated},
                      {"ok", ok}});
  return ok ? kExitPass : kExitMathFailure;
}

int run_toda_compare(const JobConfig& cfg) {
  CartanData data = CartanData::by_name(cfg.type);
  const int n = data.rank();
  const int sites = n + 1;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> init(-0.5, 0.5);
  std::vector<double> p(sites), q(sites);
  for (double& v : p) v = init(rng);
  for (double& v : q) v = init(rng);

  // Canonical relativistic Toda flow at h = 2 with the {p_i, q_j} = delta_ij
  // convention: p'_k = c_{k-1} - c_k, q'_k = -2(c_k + d_k).
  auto cd = [&](const std::vector<double>& pp, const std::vector<double>& qq) {
    TodaState s{pp, qq, 2};
    return toda_canonical(s);
  };
  auto deriv = [&](const std::vector<double>& pp, const std::vector<double>& qq,
                   std::vector<double>& dp, std::vector<double>& dq) {
    auto [c, d] = cd(pp, qq);
    for (int k = 0; k < sites; ++k) {
      int prev = (k + sites - 1) % sites;
      dp[k] = c[prev] - c[k];
      dq[k] = -2 * (c[k] + d[k]);
    }
  };

  const long steps = std::lround(cfg.t_end / cfg.dt);
  std::vector<std::vector<double>> rows;
  std::vector<double> kp1(sites), kq1(sites), kp2(sites), kq2(sites);
  std::vector<double> kp3(sites), kq3(sites), kp4(sites), kq4(sites);
  std::vector<double> tp(sites), tq(sites);
  double h0 = 0, max_dev = 0, max_drift = 0;

  for (long step = 0; step <= steps; ++step) {
    auto [c, d] = cd(p, q);
    double h_toda = 0, h_cd = 0;
    for (int k = 0; k < sites; ++k) {
      h_toda += std::exp(2 * p[k]) *
                (1 + 4 * std::exp(q[(k + 1) % sites] - q[k]));
      h_cd += c[k] + d[k];
    }
    if (step == 0) h0 = h_toda;
    max_dev = std::max(max_dev, std::abs(h_toda - h_cd) / std::abs(h0));
    max_drift = std::max(max_drift, std::abs(h_toda - h0) / std::abs(h0));
    if (step % cfg.stride == 0 || step == steps) {
      std::vector<double> row = {step * cfg.dt};
      row.insert(row.end(), p.begin(), p.end());
      row.insert(row.end(), q.begin(), q.end());
      row.insert(row.end(), c.begin(), c.end());
      row.insert(row.end(), d.begin(), d.end());
      row.push_back(h_toda);
      row.push_back(h_cd);
      rows.push_back(std::move(row));
    }
    if (step == steps) break;
    deriv(p, q, kp1, kq1);
    for (int k = 0; k < sites; ++k) {
      tp[k] = p[k] + 0.5 * cfg.dt * kp1[k];
      tq[k] = q[k] + 0.5 * cfg.dt * kq1[k];
    }
    deriv(tp, tq, kp2, kq2);
    for (int k = 0; k < sites; ++k) {
      tp[k] = p[k] + 0.5 * cfg.dt * kp2[k];
      tq[k] = q[k] + 0.5 * cfg.dt * kq2[k];
    }
    deriv(tp, tq, kp3, kq3);
    for (int k = 0; k < sites; ++k) {
      tp[k] = p[k] + cfg.dt * kp3[k];
      tq[k] = q[k] + cfg.dt * kq3[k];
    }
    deriv(tp, tq, kp4, kq4);
    for (int k = 0; k < sites; ++k) {
      p[k] += cfg.dt / 6.0 * (kp1[k] + 2 * kp2[k] + 2 * kp3[k] + kp4[k]);
      q[k] += cfg.dt / 6.0 * (kq1[k] + 2 * kq2[k] + 2 * kq3[k] + kq4[k]);
    }
  }

  std::string header = "t";
  for (int k = 0; k < sites; ++k) header += ",p" + std::to_string(k);
  for (int k = 0; k < sites; ++k) header += ",q" + std::to_string(k);
  for (int k = 0; k < sites; ++k) header += ",c" + std::to_string(k);
  for (int k = 0; k < sites; ++k) header += ",d" + std::to_string(k);
  header += ",H_toda,H_cd";
  write_csv(cfg, "toda-compare", header, rows);

  bool ok = max_dev <= 1e-12 && max_drift <= cfg.tol;
  emit(cfg, "toda-compare",
       {{"hamiltonian_agreement", max_dev},
        {"energy_drift", max_drift},
        {"tolerance", cfg.tol},
        {"ok", ok}});
  return ok ? kExitPass : kExitMathFailure;
}

void add_common(CLI::App* cmd, JobConfig& cfg, bool perms = true) {
  cmd->add_option("--type", cfg.type, "Affine type A1..A8");
  if (perms) {
    cmd->add_option("--sigma", cfg.sigma_csv,
                    "Comma-separated permutation of {0..r} (default id)");
    cmd->add_option("--tau", cfg.tau_csv,
                    "Comma-separated permutation of {0..r} (default id)");
  }
  cmd->add_option("--out", cfg.out_dir, "Directory for report files");
  cmd->add_option("--config", cfg.config_path, "JSON config file");
  cmd->add_flag("--json", cfg.json_out, "JSON output (always on; reserved)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Coxeter-Toda cells: brackets, Hamiltonians, flows"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto* cartan_cmd = app.add_subcommand("cartan", "Emit affine Cartan data");
  add_common(cartan_cmd, cfg, false);

  auto* mu_cmd = app.add_subcommand("mu-check", "Reflection chain of mu");
  add_common(mu_cmd, cfg);

  auto* br_cmd = app.add_subcommand("brackets", "Reduced bracket table");
  add_common(br_cmd, cfg);

  auto* lr_cmd =
      app.add_subcommand("leaf-rank", "Structure rank and Casimir check");
  add_common(lr_cmd, cfg);

  auto* ham_cmd = app.add_subcommand("hamiltonians", "Emit H_1..H_{r+1}");
  add_common(ham_cmd, cfg);

  auto* com_cmd = app.add_subcommand("commute", "Pairwise bracket matrix");
  add_common(com_cmd, cfg);

  auto* ind_cmd =
      app.add_subcommand("independence", "Jacobian rank at random points");
  add_common(ind_cmd, cfg);
  ind_cmd->add_option("--seed", cfg.seed, "RNG seed");
  ind_cmd->add_option("--points", cfg.points, "Number of sample points");

  auto* sim_cmd = app.add_subcommand("simulate", "RK4 Hamiltonian flow");
  add_common(sim_cmd, cfg);
  sim_cmd->add_option("--hamiltonian", cfg.hamiltonian, "H1..H{r+1}");
  sim_cmd->add_option("--dt", cfg.dt, "Step size");
  sim_cmd->add_option("--t-end", cfg.t_end, "Final time");
  sim_cmd->add_option("--stride", cfg.stride, "Record every n-th step");
  sim_cmd->add_option("--seed", cfg.seed, "RNG seed for the initial state");
  sim_cmd->add_option("--tol", cfg.tol, "Drift tolerance");

  auto* toda_cmd =
      app.add_subcommand("toda-compare", "Canonical Toda flow vs (c,d)");
  add_common(toda_cmd, cfg, false);
  toda_cmd->add_option("--dt", cfg.dt, "Step size");
  toda_cmd->add_option("--t-end", cfg.t_end, "Final time");
  toda_cmd->add_option("--stride", cfg.stride, "Record every n-th step");
  toda_cmd->add_option("--seed", cfg.seed, "RNG seed for the initial state");
  toda_cmd->add_option("--tol", cfg.tol, "Energy drift tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* cmd = app.get_subcommands().front();
    apply_config_file(cfg, cmd);
    const std::string name = cmd->get_name();
    if (name == "cartan") return run_cartan(cfg);
    if (name == "mu-check") return run_mu_check(cfg);
    if (name == "brackets") return run_brackets(cfg);
    if (name == "leaf-rank") return run_leaf_rank(cfg);
    if (name == "hamiltonians") return run_hamiltonians(cfg);
    if (name == "commute") return run_commute(cfg);
    if (name == "independence") return run_independence(cfg);
    if (name == "simulate") return run_simulate(cfg);
    if (name == "toda-compare") return run_toda_compare(cfg);
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
}
