#ifndef LIEKIT_REPRESENTATION_HPP
#define LIEKIT_REPRESENTATION_HPP

#include "liekit/lie_algebra.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace liekit {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

/// A matrix representation of a LieAlgebra: one complex square matrix per
/// basis element. Orthogonal-family representations additionally carry the
/// diagonal metric and the (alpha, beta) plane of each generator.
struct Representation {
  LieAlgebra algebra;
  std::vector<MatrixXcd> matrices;
  std::optional<Eigen::VectorXd> metric;                 // axis signature
  std::optional<std::vector<std::pair<int, int>>> plane;  // generator planes

  int dim_rep() const {
    return matrices.empty() ? 0 : static_cast<int>(matrices[0].rows());
  }
};

/// Quantum constants bundle: hbar and the spectral spacings delta_*, plus
/// the representation quantum numbers 2l, l_X, l_F. Constraints
/// delta_x*delta_p = l_X*delta_r*hbar and l*delta_q*delta_p = hbar are
/// enforced when the corresponding quantum number is set.
struct QuantumConstants {
  double hbar = 1.0;
  double delta_x = 1.0;
  double delta_p = 1.0;
  double delta_q = 1.0;
  double delta_r = 1.0;
  std::optional<int> two_l;
  std::optional<int> l_X;
  std::optional<int> l_F;

  void validate() const;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;  // sorted
  double spacing = 0.0;
  double min = 0.0;
  double max = 0.0;
  bool uniform = false;
};

/// Maximum over basis pairs of ||[R_a, R_b] - sum_k c[a][b][k] R_k||_max.
double rep_defect(const Representation& rep);

/// Adjoint representation; rep_defect is below tolerance whenever the
/// algebra satisfies Jacobi.
Representation adjoint_rep(const LieAlgebra& L);

/// Spin-l irreducible representation of so(3), dimension 2l+1, built from
/// the ladder construction with Condon-Shortley phases. Matrices are the
/// anti-Hermitian -i*J_a; the weight basis is ordered m = l .. -l so the
/// extreme-weight vector is the first basis vector.
Representation so3_irrep(int two_l);

/// Defining representation of dSO(p,q) on p+q axes, metric with q minus
/// signs first (index 0 timelike for (5,1)): (L_ab)^c_d = eta_bd d^c_a -
/// eta_ad d^c_b.
Representation defining_rep(int p, int q);
Representation defining_rep(const Eigen::VectorXd& eta,
                            const std::vector<std::string>& axis_labels);

/// Symmetric tensor power: generators act on the degree-k bosonic sector of
/// dimension C(d+k-1, k) by the number-conserving bilinear lift.
Representation sym_power_rep(const Representation& rep, int k,
                             int dim_cap = 5000);

/// Characteristic-polynomial coefficients C_0..C_d of L = sum_a coeffs_a R_a,
/// with C(z) = det(L - z*1) = sum_n C_n z^n.
std::vector<Complex> char_poly_invariants(const Representation& rep,
                                          const Eigen::VectorXd& coeffs);

/// Quadratic Casimir sum_ab K^{ab} R_a R_b using the inverse Killing form;
/// requires a semisimple algebra.
MatrixXcd quadratic_casimir(const Representation& rep);

/// Trace invariant Tr(curlyL^n) of the matrix-of-matrices of an orthogonal
/// representation: sum over index cycles of eta-raised generator products.
MatrixXcd trace_invariant(const Representation& rep, int order);

/// Sorted real spectrum with spacing statistics. With hermitize the operator
/// is multiplied by i first; eigenvalue imaginary parts above 1e-8 (relative)
/// are an error either way.
SpectrumReport spectrum(const MatrixXcd& op, bool hermitize);

}  // namespace liekit

#endif
