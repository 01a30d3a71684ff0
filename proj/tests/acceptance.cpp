// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "liekit/homotopy.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/oscillator.hpp"
#include "liekit/quantify.hpp"
#include "liekit/representation.hpp"
#include "liekit/stime.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace liekit;

namespace {

bool criterion1_dimension_law() {
  for (int two_l = 0; two_l <= 80; ++two_l) {
    const Representation rep = so3_irrep(two_l);
    if (rep.dim_rep() != two_l + 1) return false;
    if (rep_defect(rep) > 1e-12) return false;
  }
  return true;
}

bool criterion2_contraction_endpoints() {
  const LieAlgebra dh1 =
      make_algebra("dH(1)", {"q", "p", "r"}, {{"q", "p", "r", 1.0}});
  const HomotopyPath segal = segal_path(Signature::Compact);
  if (structure_distance(segal.evaluate(0.0), dh1) != 0.0) return false;
  if (classify(segal.evaluate(0.0)).killing_rank != 0) return false;
  for (double s : {0.1, 0.5, 1.0})
    if (classify(segal.evaluate(s)).killing_rank != 3) return false;

  for (Signature sig :
       {Signature::Compact, Signature::Minkowski51, Signature::Split33}) {
    const HomotopyPath path = stime_path(sig);
    if (structure_distance(path.evaluate(0.0), lie15(sig)) != 0.0) return false;
    const int rank0 = classify(path.evaluate(0.0)).killing_rank;
    for (double s : {0.1, 0.5, 1.0}) {
      const int rank = classify(path.evaluate(s)).killing_rank;
      if (rank != 15 || rank <= rank0) return false;
    }
  }
  return true;
}

bool criterion3_jacobi_along_paths() {
  const std::vector<HomotopyPath> paths = {segal_path(Signature::Compact),
                                           stime_path(Signature::Compact),
                                           boson_path(2)};
  for (const auto& path : paths)
    for (int i = 0; i <= 32; ++i)
      if (jacobi_defect(path.evaluate(i / 32.0)) > 1e-10) return false;
  return true;
}

bool criterion4_ccr_exactness() {
  for (int two_l = 2; two_l <= 40; ++two_l) {
    QuantumConstants qc;
    qc.two_l = two_l;
    qc.delta_q = qc.delta_p = std::sqrt(1.0 / (0.5 * two_l));
    qc.delta_r = 0.7;
    const OscillatorOperators ops = simplified_oscillator(qc);
    const MatrixXcd comm = ops.q * ops.p - ops.p * ops.q;
    const double coeff = qc.delta_q * qc.delta_p / qc.delta_r;
    if ((comm - coeff * ops.r).cwiseAbs().maxCoeff() > 1e-12) return false;
  }

  QuantumConstants bqc;
  bqc.delta_q = 0.8;
  bqc.delta_p = 0.6;
  bqc.delta_r = 0.9;
  for (int modes = 1; modes <= 6; ++modes)
    for (int power : {1, 2}) {
      const BosonOperators ops = simplified_boson(modes, bqc, power);
      for (int m = 0; m < modes; ++m)
        for (int n = 0; n < modes; ++n) {
          MatrixXcd res = ops.q[m] * ops.p[n] - ops.p[n] * ops.q[m];
          if (m == n) res -= bqc.delta_q * bqc.delta_p * ops.l_xpyp;
          if (res.cwiseAbs().maxCoeff() > 1e-12) return false;
        }
    }
  return true;
}

bool criterion5_correspondence_convergence() {
  const auto rows = correspondence_table({16, 32, 64, 128}, 4, 1.0);
  if (rows.size() != 4) return false;
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].err_q >= rows[i - 1].err_q ||
        rows[i].err_p >= rows[i - 1].err_p)
      return false;
  const double ratio = rows[3].err_q / rows[2].err_q;
  return ratio >= 0.35 && ratio <= 0.65;
}

bool criterion6_extreme_weight_energy() {
  const double hbar = 1.0;
  for (int two_l = 2; two_l <= 40; ++two_l) {
    QuantumConstants qc;
    qc.hbar = hbar;
    qc.two_l = two_l;
    qc.delta_q = qc.delta_p = std::sqrt(hbar / (0.5 * two_l));
    const OscillatorOperators ops = simplified_oscillator(qc);
    VectorXcd vac = VectorXcd::Zero(ops.rep.dim_rep());
    vac[0] = 1.0;
    const Complex energy = vac.dot((ops.q * ops.q + ops.p * ops.p) * vac);
    if (std::abs(energy - Complex(hbar, 0.0)) > 1e-12) return false;
  }
  return true;
}

bool criterion7_casimir_behavior() {
  // Scalar on each irreducible block.
  for (int two_l : {2, 4, 6, 10}) {
    const Representation rep = so3_irrep(two_l);
    const MatrixXcd c2 = quadratic_casimir(rep);
    const MatrixXcd scalar =
        c2(0, 0) * MatrixXcd::Identity(rep.dim_rep(), rep.dim_rep());
    if ((c2 - scalar).cwiseAbs().maxCoeff() > 1e-8) return false;
  }

  // Conjugation invariance of the characteristic polynomial, 10 seeded draws.
  const Representation so6 = defining_rep(6, 0);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int n = so6.algebra.dim();
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd coeffs(n);
    for (int a = 0; a < n; ++a) coeffs[a] = unif(rng);
    const int b = static_cast<int>(rng() % n);
    const auto before = char_poly_invariants(so6, coeffs);

    Representation conj = so6;
    const MatrixXcd g = so6.matrices[b].exp();
    const MatrixXcd ginv = (-so6.matrices[b]).exp();
    for (auto& m : conj.matrices) m = g * m * ginv;
    const auto after = char_poly_invariants(conj, coeffs);
    for (size_t i = 0; i < before.size(); ++i) {
      const double ref = std::max(1.0, std::abs(before[i]));
      if (std::abs(before[i] - after[i]) / ref > 1e-7) return false;
    }
    // Odd coefficients vanish on orthogonal representations.
    for (size_t i = 1; i < before.size(); i += 2)
      if (std::abs(before[i]) > 1e-8) return false;
  }
  return true;
}

bool criterion8_lambda2_identity() {
  double prev = -1.0;
  for (int k : {2, 4, 8, 16}) {
    const Lambda2Report rep = lambda2_check_sym(k);
    if (prev >= 0.0 && std::abs(rep.ratio - 1.0) >= prev) return false;
    prev = std::abs(rep.ratio - 1.0);
    if (std::abs(rep.cross_term) > 1e-9 * rep.value) return false;
  }
  return true;
}

bool criterion9_quantification_relations() {
  for (int d = 1; d <= 10; ++d)
    if (relation_defect(quantify(Sigma::Minus, d, 0)) > 1e-13) return false;
  for (auto [d, cutoff] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 3}})
    if (relation_defect(quantify(Sigma::Plus, d, cutoff)) > 1e-12) return false;

  // Wick 4-point factorization.
  const double hbar = 1.5;
  const QuantifiedSystem sys = quantify(Sigma::Plus, 2, 4, hbar);
  auto g2 = [&](int a, int b) { return green_function(sys, {a, b}); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const Complex lhs = green_function(sys, {a, b, c, d});
          const Complex rhs =
              g2(a, b) * g2(c, d) + g2(a, c) * g2(b, d) + g2(a, d) * g2(b, c);
          if (std::abs(lhs - rhs) > 1e-9) return false;
        }

  // Lifted one-quantum spectra against the exhaustive occupation-sum oracle.
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int d = 1; d <= 3; ++d)
    for (int cutoff = 1; cutoff <= 3; ++cutoff) {
      MatrixXcd h = MatrixXcd::Zero(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) h(i, j) = Complex(unif(rng), unif(rng));
      h = (h + h.adjoint()).eval();

      const QuantifiedSystem fock = quantify(Sigma::Plus, d, cutoff);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> single(h);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> lifted(
          MatrixXcd(quantified_action(fock, h)));

      std::vector<double> expected;
      std::vector<int> occ(d, 0);
      const auto mu = single.eigenvalues();
      const std::function<void(int, int)> enumerate = [&](int mode, int used) {
        if (mode == d) {
          double sum = 0.0;
          for (int i = 0; i < d; ++i) sum += occ[i] * mu[i];
          expected.push_back(sum);
          return;
        }
        for (int take = 0; take + used <= cutoff; ++take) {
          occ[mode] = take;
          enumerate(mode + 1, used + take);
        }
        occ[mode] = 0;
      };
      enumerate(0, 0);
      std::sort(expected.begin(), expected.end());

      if (lifted.eigenvalues().size() != static_cast<long>(expected.size()))
        return false;
      for (size_t i = 0; i < expected.size(); ++i)
        if (std::abs(lifted.eigenvalues()[i] - expected[i]) > 1e-9)
          return false;
    }
  return true;
}

bool criterion10_residual_scaling() {
  for (const auto& row : residual_scaling_sweep()) {
    if (row.small_param == "none") {
      if (row.norm > 1e-12) return false;
    } else if (std::abs(row.fitted_order - row.declared_order) > 0.05) {
      return false;
    }
  }
  return true;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + LIEKIT_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool criterion11_cli_contract() {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path();
  const fs::path a = tmp / "liekit_acc_a.csv";
  const fs::path b = tmp / "liekit_acc_b.csv";
  const std::string data = LIEKIT_TEST_DATA;

  // Determinism: identical flags (and seed) produce byte-identical CSVs.
  for (const std::string args :
       {std::string("contract --path segal --samples 9 --out "),
        std::string("quantify --sigma + --modes 2 --cutoff 4 --out ")}) {
    if (run_cli(args + "\"" + a.string() + "\"") != 0) return false;
    if (run_cli(args + "\"" + b.string() + "\"") != 0) return false;
    const std::string sa = slurp(a), sb = slurp(b);
    if (sa.empty() || sa != sb) return false;
  }

  // Exit-code contract.
  if (run_cli("check \"" + data + "/malformed.json\"") != 2) return false;
  if (run_cli("check \"" + data + "/broken_jacobi.json\"") != 1) return false;
  if (run_cli("check \"" + data + "/dh1.json\"") != 0) return false;

  std::error_code ec;
  fs::remove(a, ec);
  fs::remove(b, ec);
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"spin-l irrep dimension 2l+1 and defect <= 1e-12 up to 2l = 80",
       criterion1_dimension_law},
      {"contraction endpoints exact with Killing-rank jump",
       criterion2_contraction_endpoints},
      {"Jacobi defect <= 1e-10 at 33 samples on segal/stime/boson paths",
       criterion3_jacobi_along_paths},
      {"simplified CCR exact to 1e-12 (oscillator and boson families)",
       criterion4_ccr_exactness},
      {"correspondence error decreases at rate O(1/l)",
       criterion5_correspondence_convergence},
      {"extreme-weight oscillator energy equals hbar to 1e-12",
       criterion6_extreme_weight_energy},
      {"Casimir scalar, conjugation-invariant char poly, odd terms vanish",
       criterion7_casimir_behavior},
      {"Lambda2 vacuum ratio monotone toward 1 with vanishing cross term",
       criterion8_lambda2_identity},
      {"quantification relations, Wick factorization, lifted spectra oracle",
       criterion9_quantification_relations},
      {"residual log-log slopes match declared orders within 0.05",
       criterion10_residual_scaling},
      {"CLI determinism and exit-code contract", criterion11_cli_contract},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      std::cout << "criterion " << (i + 1) << " threw: " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].name << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
