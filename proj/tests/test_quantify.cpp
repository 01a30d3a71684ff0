#include "doctest.h"

#include "liekit/oscillator.hpp"
#include "liekit/quantify.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

using namespace liekit;

namespace {

MatrixXcd dense(const SparseXcd& m) { return MatrixXcd(m); }

}  // namespace

TEST_CASE("fermionic quantification: exact anticommutators") {
  const QuantifiedSystem sys = quantify(Sigma::Minus, 2, 0);
  CHECK(sys.space_dim == 4);
  const MatrixXcd a1 = dense(sys.creators[0]);
  const MatrixXcd c1 = dense(sys.annihilators[0]);
  CHECK((c1 * a1 + a1 * c1 - MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() ==
        0.0);
  for (int d = 1; d <= 6; ++d)
    CHECK(relation_defect(quantify(Sigma::Minus, d, 0)) <= 1e-13);
  CHECK_THROWS(quantify(Sigma::Minus, 13, 0));
}

TEST_CASE("bosonic quantification: truncated Fock relations") {
  const double hbar = 2.0;
  const QuantifiedSystem sys = quantify(Sigma::Plus, 1, 3, hbar);
  CHECK(sys.space_dim == 4);
  CHECK(relation_defect(sys) <= 1e-12);

  // At the boundary state the commutator collapses to -a^+ a.
  const MatrixXcd a = dense(sys.creators[0]);
  const MatrixXcd c = dense(sys.annihilators[0]);
  const MatrixXcd comm = c * a - a * c;
  long top = -1;
  for (long s = 0; s < sys.space_dim; ++s)
    if (sys.degree[s] == 3) top = s;
  REQUIRE(top >= 0);
  CHECK(std::abs(comm(top, top) - Complex(-3.0 * hbar, 0.0)) <= 1e-12);

  CHECK(relation_defect(quantify(Sigma::Plus, 3, 4)) <= 1e-12);
  CHECK_THROWS(quantify(Sigma::Plus, 0, 3));
  CHECK_THROWS(quantify(Sigma::Plus, 2, 0));
}

TEST_CASE("maxwellonic quantification: no reordering term") {
  const QuantifiedSystem sys = quantify(Sigma::Zero, 2, 3);
  CHECK(sys.space_dim == 1 + 2 + 4 + 8);
  CHECK(relation_defect(sys) <= 1e-13);
  // c^n a_m = hbar delta with no sigma term, even for words.
  const MatrixXcd prod = dense(sys.annihilators[1]) * dense(sys.creators[0]);
  CHECK(prod.cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("Green's functions and Wick factorization") {
  const double hbar = 1.5;
  const QuantifiedSystem sys = quantify(Sigma::Plus, 2, 4, hbar);

  auto g2 = [&](int a, int b) { return green_function(sys, {a, b}); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Complex expected = (a == b) ? Complex(hbar / 2, 0.0) : 0.0;
      CHECK(std::abs(g2(a, b) - expected) <= 1e-12);
    }
  // Odd orders vanish.
  CHECK(std::abs(green_function(sys, {0})) <= 1e-14);
  CHECK(std::abs(green_function(sys, {0, 1, 0})) <= 1e-14);

  // 4-point Isserlis factorization over all index choices.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const Complex lhs = green_function(sys, {a, b, c, d});
          const Complex rhs =
              g2(a, b) * g2(c, d) + g2(a, c) * g2(b, d) + g2(a, d) * g2(b, c);
          CHECK(std::abs(lhs - rhs) <= 1e-9);
        }
  CHECK_THROWS(green_function(sys, {0, 5}));
}

TEST_CASE("quantified action lifts one-quantum operators") {
  const QuantifiedSystem sys = quantify(Sigma::Plus, 2, 2);
  // Identity lifts to the total number operator.
  const MatrixXcd num =
      dense(quantified_action(sys, MatrixXcd::Identity(2, 2)));
  for (long s = 0; s < sys.space_dim; ++s)
    CHECK(std::abs(num(s, s) - Complex(sys.degree[s], 0.0)) <= 1e-12);

  // diag(l1, l2) at cutoff 2: spectrum = occupation sums.
  MatrixXcd a1 = MatrixXcd::Zero(2, 2);
  a1(0, 0) = 0.3;
  a1(1, 1) = 1.1;
  Eigen::ComplexEigenSolver<MatrixXcd> es(dense(quantified_action(sys, a1)));
  std::vector<double> got;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    got.push_back(es.eigenvalues()[i].real());
  std::vector<double> expected{0.0, 0.3, 1.1, 0.6, 1.4, 2.2};
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  REQUIRE(got.size() == expected.size());
  for (size_t i = 0; i < got.size(); ++i)
    CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-10));
  CHECK_THROWS(quantified_action(sys, MatrixXcd::Identity(3, 3)));
}

TEST_CASE("quantified action spectrum: exhaustive occupation-sum oracle") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int d = 1; d <= 3; ++d)
    for (int cutoff = 1; cutoff <= 3; ++cutoff) {
      MatrixXcd h = MatrixXcd::Zero(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) h(i, j) = Complex(unif(rng), unif(rng));
      h = (h + h.adjoint()).eval();  // Hermitian one-quantum operator

      const QuantifiedSystem sys = quantify(Sigma::Plus, d, cutoff);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> single(h);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> lifted(
          dense(quantified_action(sys, h)));

      // Oracle: all occupation-weighted sums of the one-quantum eigenvalues.
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

      REQUIRE(lifted.eigenvalues().size() ==
              static_cast<long>(expected.size()));
      for (size_t i = 0; i < expected.size(); ++i)
        CHECK(lifted.eigenvalues()[i] ==
              doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("simplified boson operators") {
  QuantumConstants qc;
  qc.delta_q = 0.4;
  qc.delta_p = 0.9;
  qc.delta_r = 0.3;

  for (int n_modes = 1; n_modes <= 6; ++n_modes) {
    for (int power : {1, 2}) {
      const BosonOperators ops = simplified_boson(n_modes, qc, power);
      for (int m = 0; m < n_modes; ++m)
        for (int n = 0; n < n_modes; ++n) {
          const MatrixXcd comm = ops.q[m] * ops.p[n] - ops.p[n] * ops.q[m];
          const MatrixXcd expected = (m == n)
                                         ? MatrixXcd(qc.delta_q * qc.delta_p *
                                                     ops.l_xpyp)
                                         : MatrixXcd::Zero(comm.rows(),
                                                           comm.cols());
          CHECK((comm - expected).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
  }

  // Regulator term: [q^m, q^n] = -delta_q^2 L_{mn}, exactly quadratic in
  // delta_q.
  const BosonOperators big = simplified_boson(2, qc, 1);
  QuantumConstants half = qc;
  half.delta_q = qc.delta_q / 2;
  const BosonOperators small = simplified_boson(2, half, 1);
  const double big_norm =
      (big.q[0] * big.q[1] - big.q[1] * big.q[0]).cwiseAbs().maxCoeff();
  const double small_norm =
      (small.q[0] * small.q[1] - small.q[1] * small.q[0]).cwiseAbs().maxCoeff();
  CHECK(big_norm > 0.0);
  CHECK(small_norm == doctest::Approx(big_norm / 4).epsilon(1e-12));

  // One mode: the (q, p) spectra match the finite oscillator's.
  QuantumConstants osc;
  osc.two_l = 2;
  osc.delta_q = osc.delta_p = 1.0;
  const BosonOperators b1 = simplified_boson(1, osc, 1);
  const auto sp = spectrum(Complex(0.0, 1.0) * b1.q[0], false);
  CHECK(sp.uniform);
  CHECK(sp.min == doctest::Approx(-1.0));
  CHECK(sp.max == doctest::Approx(1.0));
  CHECK_THROWS(simplified_boson(0, qc, 1));
}

TEST_CASE("cyclic subspaces") {
  // Ladder generators reach the whole spin-l space from the extreme weight.
  const Representation rep = so3_irrep(6);
  VectorXcd vac = VectorXcd::Zero(7);
  vac[0] = 1.0;
  std::vector<MatrixXcd> gens(rep.matrices.begin(), rep.matrices.end());
  CHECK(cyclic_subspace(gens, vac, 0).size() == 1);
  CHECK(cyclic_subspace(gens, vac, 6).size() == 7);

  // Fermionic creators: degree 2 over 2 modes spans 2^2 states.
  const QuantifiedSystem sys = quantify(Sigma::Minus, 2, 0);
  std::vector<MatrixXcd> creators;
  for (const auto& a : sys.creators) creators.push_back(MatrixXcd(a));
  CHECK(cyclic_subspace(creators, sys.vacuum, 2).size() == 4);

  VectorXcd not_unit = 2.0 * vac;
  CHECK_THROWS(cyclic_subspace(gens, not_unit, 1));
}

TEST_CASE("sigma tags") {
  CHECK(parse_sigma("+") == Sigma::Plus);
  CHECK(parse_sigma("-") == Sigma::Minus);
  CHECK(parse_sigma("0") == Sigma::Zero);
  CHECK(sigma_tag(Sigma::Zero) == "0");
  CHECK_THROWS(parse_sigma("q"));
}
