#ifndef LIEKIT_STIME_HPP
#define LIEKIT_STIME_HPP

#include "liekit/homotopy.hpp"
#include "liekit/representation.hpp"

#include <string>
#include <vector>

namespace liekit {

/// The physical operator dictionary carried by a representation of the
/// orthogonal algebra on axes (0,1,2,3,X,Y): x_mu = dx L_{muX},
/// p_mu = dp L_{muY}, r = dr L_{YX}, i_op = r/(l dr) with l the extreme
/// weight (the symmetric power k, or 1 for the defining rep).
struct StimeOperators {
  Representation rep;
  QuantumConstants qc;
  Signature signature = Signature::Compact;
  Eigen::VectorXd eta4;        // 4-dimensional space-time metric diagonal
  int l = 1;                   // extreme weight of i*L_{XY}
  std::vector<MatrixXcd> x;    // 4
  std::vector<MatrixXcd> p;    // 4
  std::vector<MatrixXcd> lorentz;  // 6: planes (01,02,03,12,13,23)
  MatrixXcd r;
  MatrixXcd i_op;
};

struct ResidualRow {
  std::string relation;
  double norm;
  std::string small_param;
  double declared_order;
};

struct ResidualSweepRow {
  std::string relation;
  double norm;  // at the smallest sweep point
  std::string small_param;
  double declared_order;
  double fitted_order;
};

struct Lambda2Report {
  int k;
  double value;       // <vac| Lambda(2) |vac> in the expansion normalization
  double target;      // l^2
  double ratio;       // value / target
  double cross_term;  // sum_mu <{L_{Xmu}, L_{Ymu}}> on the vacuum
  double cross_block; // -sum_mu <(L_{muX})^2 + (L_{muY})^2> (reported)
};

/// The singular 15-dimensional space-time algebra on basis
/// (L01..L23, x0..x3, p0..p3, r), built directly from its defining relations;
/// equals stime_path(sig).evaluate(0) with structure distance 0.
LieAlgebra lie15(Signature sig = Signature::Compact);

/// Consistent constants for the k-th symmetric power: dx = dp = sqrt(hbar/k),
/// dr = 1/k^2, l_X = k, so that [x, p] freezes to i*hbar*eta on the vacuum.
QuantumConstants stime_constants(int k, double hbar = 1.0);

/// rep_power = 1 is the defining rep, k > 1 the k-th symmetric power.
StimeOperators stime_operators(Signature sig, int rep_power,
                               const QuantumConstants& qc);

/// Norms of (simplified commutator - singular right-hand side), per relation
/// class, with the frozen i evaluated on the near-extreme weight subspace of
/// i*L_{XY} (compact signature).
std::vector<ResidualRow> residuals_vs_singular(const StimeOperators& ops);

/// 8-point geometric sweeps of each residual's small parameter with fitted
/// log-log slopes (compact signature).
std::vector<ResidualSweepRow> residual_scaling_sweep(double hbar = 1.0);

/// Vacuum expectation of the quadratic trace invariant in the expansion
/// normalization, on the k-th symmetric power of compact so(6); evaluated
/// matrix-free, so large k is cheap.
Lambda2Report lambda2_check_sym(int k);

/// Same report from materialized StimeOperators (compact signature only).
Lambda2Report lambda2_check(const StimeOperators& ops);

/// A1 = sum_{mu nu} eta^{mu nu} p_mu i_op p_nu + m^2 i_op.
MatrixXcd wave_operator(const StimeOperators& ops, double m);

/// Max commutator norm over the commuting triple (L_{0X}, L_{1Y}, L_{23}).
double commuting_triple_defect(const StimeOperators& ops);

/// Dimension formula 2*N_x + 2 for the simplified boson algebra over N_x
/// position modes.
int simplified_dimension(int n_x);

}  // namespace liekit

#endif
