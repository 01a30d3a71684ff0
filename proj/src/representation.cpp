#include "liekit/representation.hpp"

#include "liekit/occupation.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liekit {

void QuantumConstants::validate() const {
  if (hbar <= 0 || delta_x <= 0 || delta_p <= 0 || delta_q <= 0 ||
      delta_r <= 0)
    throw std::invalid_argument("quantum constants must be positive");
  if (l_X && *l_X > 0) {
    const double lhs = delta_x * delta_p;
    const double rhs = *l_X * delta_r * hbar;
    if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs)))
      throw std::invalid_argument(
          "constraint delta_x*delta_p = l_X*delta_r*hbar violated");
  }
  if (two_l && *two_l > 0) {
    const double l = 0.5 * *two_l;
    const double lhs = l * delta_q * delta_p;
    if (std::abs(lhs - hbar) > 1e-12 * std::max(std::abs(lhs), hbar))
      throw std::invalid_argument("constraint l*delta_q*delta_p = hbar violated");
  }
}

double rep_defect(const Representation& rep) {
  const auto& L = rep.algebra;
  const int n = L.dim();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      MatrixXcd m = rep.matrices[a] * rep.matrices[b] -
                    rep.matrices[b] * rep.matrices[a];
      for (int k = 0; k < n; ++k) {
        const double c = L.c(a, b, k);
        if (c != 0.0) m -= c * rep.matrices[k];
      }
      worst = std::max(worst, m.cwiseAbs().maxCoeff());
    }
  return worst;
}

Representation adjoint_rep(const LieAlgebra& L) {
  Representation rep;
  rep.algebra = L;
  for (const auto& ad : adjoint_matrices(L))
    rep.matrices.push_back(ad.cast<Complex>());
  return rep;
}

Representation so3_irrep(int two_l) {
  if (two_l < 0) throw std::invalid_argument("so3_irrep: two_l >= 0");
  const int d = two_l + 1;
  const double l = 0.5 * two_l;
  // Weight basis ordered m = l, l-1, ..., -l (index 0 is the extreme weight).
  MatrixXcd jz = MatrixXcd::Zero(d, d);
  MatrixXcd jplus = MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) jz(i, i) = l - i;
  for (int i = 1; i < d; ++i) {
    const double m = l - i;  // J+ |l,m> = sqrt((l-m)(l+m+1)) |l,m+1>
    jplus(i - 1, i) = std::sqrt((l - m) * (l + m + 1.0));
  }
  const MatrixXcd jminus = jplus.adjoint();
  const Complex iu(0.0, 1.0);
  const MatrixXcd jx = 0.5 * (jplus + jminus);
  const MatrixXcd jy = (jplus - jminus) / (2.0 * iu);

  Representation rep;
  rep.algebra = so3_algebra();
  rep.matrices = {-iu * jx, -iu * jy, -iu * jz};
  return rep;
}

Representation defining_rep(const Eigen::VectorXd& eta,
                            const std::vector<std::string>& axis_labels) {
  const int d = static_cast<int>(eta.size());
  Representation rep;
  rep.algebra = orthogonal_algebra(eta, axis_labels);
  rep.metric = eta;
  std::vector<std::pair<int, int>> planes;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      MatrixXcd m = MatrixXcd::Zero(d, d);
      // (L_ab)^c_d = eta_bd d^c_a - eta_ad d^c_b
      m(a, b) = eta[b];
      m(b, a) = -eta[a];
      rep.matrices.push_back(m);
      planes.emplace_back(a, b);
    }
  rep.plane = planes;
  return rep;
}

Representation defining_rep(int p, int q) {
  if (p + q < 2) throw std::invalid_argument("defining_rep: p+q >= 2");
  Eigen::VectorXd eta(p + q);
  std::vector<std::string> labels;
  for (int i = 0; i < p + q; ++i) {
    eta[i] = (i < q) ? -1.0 : 1.0;  // timelike axes first
    labels.push_back(std::to_string(i));
  }
  return defining_rep(eta, labels);
}

Representation sym_power_rep(const Representation& rep, int k, int dim_cap) {
  if (k < 1) throw std::invalid_argument("sym_power_rep: k >= 1");
  if (k == 1) return rep;
  const int d = rep.dim_rep();
  const long dim = bosonic_dimension(d, k);
  if (dim > dim_cap)
    throw std::invalid_argument("sym_power_rep: dimension " +
                                std::to_string(dim) + " exceeds cap " +
                                std::to_string(dim_cap));
  OccupationBasis basis(d, k, k);
  Representation out;
  out.algebra = rep.algebra;
  out.metric = rep.metric;
  out.plane = rep.plane;
  for (const auto& m : rep.matrices)
    out.matrices.push_back(basis.lift_matrix(m));
  return out;
}

std::vector<Complex> char_poly_invariants(const Representation& rep,
                                          const Eigen::VectorXd& coeffs) {
  const int n = rep.algebra.dim();
  if (coeffs.size() != n)
    throw std::invalid_argument("char_poly_invariants: coeffs length mismatch");
  const int d = rep.dim_rep();
  MatrixXcd L = MatrixXcd::Zero(d, d);
  for (int a = 0; a < n; ++a)
    if (coeffs[a] != 0.0) L += coeffs[a] * rep.matrices[a];
  Eigen::ComplexEigenSolver<MatrixXcd> es(L, false);
  const auto& ev = es.eigenvalues();
  // det(L - z) = prod_i (lambda_i - z); accumulate coefficients in z.
  std::vector<Complex> poly{Complex(1.0, 0.0)};
  for (int i = 0; i < d; ++i) {
    std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j] * ev[i];
      next[j + 1] -= poly[j];
    }
    poly = std::move(next);
  }
  return poly;  // poly[n] = C_n
}

MatrixXcd quadratic_casimir(const Representation& rep) {
  const int n = rep.algebra.dim();
  const Eigen::MatrixXd K = killing_form(rep.algebra);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(K);
  if (!lu.isInvertible())
    throw std::invalid_argument("quadratic_casimir: Killing form singular");
  const Eigen::MatrixXd Kinv = lu.inverse();
  const int d = rep.dim_rep();
  MatrixXcd c2 = MatrixXcd::Zero(d, d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (Kinv(a, b) != 0.0)
        c2 += Kinv(a, b) * (rep.matrices[a] * rep.matrices[b]);
  return c2;
}

MatrixXcd trace_invariant(const Representation& rep, int order) {
  if (!rep.metric || !rep.plane)
    throw std::invalid_argument("trace_invariant: orthogonal metric missing");
  if (order < 1) throw std::invalid_argument("trace_invariant: order >= 1");
  const Eigen::VectorXd& eta = *rep.metric;
  const int axes = static_cast<int>(eta.size());
  const int d = rep.dim_rep();

  // Assemble the matrix-of-matrices: block(a,b) = L^a_b = eta^{aa} L_{ab}.
  std::vector<std::vector<MatrixXcd>> block(
      axes, std::vector<MatrixXcd>(axes, MatrixXcd::Zero(d, d)));
  for (size_t g = 0; g < rep.plane->size(); ++g) {
    auto [a, b] = (*rep.plane)[g];
    block[a][b] = (1.0 / eta[a]) * rep.matrices[g];
    block[b][a] = -(1.0 / eta[b]) * rep.matrices[g];
  }

  // Tr curlyL^n = sum over cyclic index chains of block products.
  std::vector<std::vector<MatrixXcd>> power = block;
  for (int step = 1; step < order; ++step) {
    std::vector<std::vector<MatrixXcd>> next(
        axes, std::vector<MatrixXcd>(axes, MatrixXcd::Zero(d, d)));
    for (int a = 0; a < axes; ++a)
      for (int b = 0; b < axes; ++b)
        for (int c = 0; c < axes; ++c)
          next[a][b] += power[a][c] * block[c][b];
    power = std::move(next);
  }
  MatrixXcd out = MatrixXcd::Zero(d, d);
  for (int a = 0; a < axes; ++a) out += power[a][a];
  return out;
}

SpectrumReport spectrum(const MatrixXcd& op, bool hermitize) {
  if (op.rows() != op.cols())
    throw std::invalid_argument("spectrum: matrix not square");
  const MatrixXcd m = hermitize ? MatrixXcd(Complex(0.0, 1.0) * op) : op;
  Eigen::ComplexEigenSolver<MatrixXcd> es(m, false);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  SpectrumReport rep;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i].imag()) > 1e-8 * scale)
      throw std::invalid_argument(
          "spectrum: operator not Hermitian (complex eigenvalues)");
    rep.eigenvalues.push_back(ev[i].real());
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  rep.min = rep.eigenvalues.front();
  rep.max = rep.eigenvalues.back();

  // Uniformity is judged on distinct eigenvalues (degeneracies collapsed).
  std::vector<double> distinct;
  const double merge_tol = 1e-8 * scale;
  for (double v : rep.eigenvalues)
    if (distinct.empty() || v - distinct.back() > merge_tol)
      distinct.push_back(v);
  if (distinct.size() <= 1) {
    rep.spacing = 0.0;
    rep.uniform = true;
    return rep;
  }
  rep.spacing = (distinct.back() - distinct.front()) /
                static_cast<double>(distinct.size() - 1);
  rep.uniform = true;
  for (size_t i = 1; i < distinct.size(); ++i)
    if (std::abs(distinct[i] - distinct[i - 1] - rep.spacing) >
        1e-8 * std::max(1.0, std::abs(rep.spacing)))
      rep.uniform = false;
  return rep;
}

}  // namespace liekit
