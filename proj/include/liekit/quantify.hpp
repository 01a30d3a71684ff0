#ifndef LIEKIT_QUANTIFY_HPP
#define LIEKIT_QUANTIFY_HPP

#include "liekit/representation.hpp"

#include <Eigen/SparseCore>

#include <string>
#include <vector>

namespace liekit {

using SparseXcd = Eigen::SparseMatrix<Complex>;

enum class Sigma { Plus, Minus, Zero };

Sigma parse_sigma(const std::string& tag);  // "+", "-", "0"
std::string sigma_tag(Sigma sigma);

/// One-quantum input/output space: modes 0..dim_v-1 are kets, their daggered
/// partners are tracked by label only.
struct IoSpace {
  int dim_v = 0;
  std::vector<std::string> labels;
};

/// Many-system (Fock-like) space for one statistics choice. Creators a_n and
/// annihilators c^n satisfy c^n a_m - sigma a_m c^n = hbar delta^n_m, exactly
/// for sigma = - and away from the truncation boundary for sigma = +, 0.
struct QuantifiedSystem {
  Sigma sigma = Sigma::Plus;
  int dim_v = 0;
  int cutoff = 0;
  double hbar = 1.0;
  long space_dim = 0;
  std::vector<SparseXcd> creators;
  std::vector<SparseXcd> annihilators;
  VectorXcd vacuum;
  Eigen::VectorXd degree;  // total occupation / word length per basis state
};

/// Worst-case defect of the defining relations: anticommutators for
/// sigma = -, and the (anti)commutation relations restricted to states of
/// degree <= cutoff - 1 for sigma = +, 0.
double relation_defect(const QuantifiedSystem& sys);

/// sigma = +: symmetric Fock space truncated at total occupation <= cutoff,
/// ladder normalization carries hbar. sigma = -: full 2^dim_v antisymmetric
/// space via the Jordan-Wigner construction, unit anticommutators. sigma = 0:
/// free tensor algebra on words of length <= cutoff.
QuantifiedSystem quantify(Sigma sigma, int dim_v, int cutoff,
                          double hbar = 1.0);

/// Operators for the orthogonal ("simplified") boson algebra on axes
/// {1..N, X', Y'}: q^n = dq L_{nX'}, p_n = dp L_{Y'n}, i_op = dr L_{Y'X'},
/// plus the surviving rotation regulators L_{mn}.
struct BosonOperators {
  Representation rep;
  QuantumConstants qc;
  std::vector<MatrixXcd> q;
  std::vector<MatrixXcd> p;
  MatrixXcd i_op;
  MatrixXcd l_xpyp;  // the raw L_{X'Y'} generator entering the CCR identity
  std::vector<MatrixXcd> l_rot;
};

/// rep_power = 1 selects the defining representation, k > 1 the k-th
/// symmetric power.
BosonOperators simplified_boson(int modes, const QuantumConstants& qc,
                                int rep_power = 1);

/// Orthonormal basis of span{ words of degree <= max_degree in the given
/// generators, applied to the cyclic vector }.
std::vector<VectorXcd> cyclic_subspace(const std::vector<MatrixXcd>& generators,
                                       const VectorXcd& vacuum,
                                       int max_degree);

/// Vacuum expectation <vac| phi_{i1} ... phi_{in} |vac> of the field
/// operators phi_a = (a_a + c^a)/sqrt(2).
Complex green_function(const QuantifiedSystem& sys,
                       const std::vector<int>& indices);

/// Second-quantized bilinear lift sum_mn a_m (A1)_mn c^n / hbar; A1 = identity
/// gives the total number operator.
SparseXcd quantified_action(const QuantifiedSystem& sys, const MatrixXcd& a1);

}  // namespace liekit

#endif
