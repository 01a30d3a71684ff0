#ifndef LIEKIT_LIE_ALGEBRA_HPP
#define LIEKIT_LIE_ALGEBRA_HPP

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace liekit {

/// A finite-dimensional Lie algebra given by a dense structure tensor
/// c[a](b,k), meaning [e_a, e_b] = sum_k c[a](b,k) e_k, on a labeled basis.
/// Generators may optionally carry a dagger signature (+1 Hermitian,
/// -1 anti-Hermitian) which is enforced at the representation level.
struct LieAlgebra {
  std::string name;
  std::vector<std::string> basis;
  std::vector<Eigen::MatrixXd> structure;  // structure[a](b,k) = c[a][b][k]
  std::optional<std::vector<int>> dagger_signature;

  int dim() const { return static_cast<int>(basis.size()); }
  double c(int a, int b, int k) const { return structure[a](b, k); }
  int index_of(const std::string& label) const;
};

struct ClassificationReport {
  int killing_rank = 0;
  int center_dim = 0;
  int derived_dim = 0;
  bool semisimple = false;
  std::map<std::string, double> defects;
};

/// Sparse bracket entry (a, b, k, value): [e_a, e_b] contains value * e_k.
using BracketEntry = std::tuple<std::string, std::string, std::string, double>;

/// Builds an algebra from sparse bracket entries; the tensor is completed
/// antisymmetrically, and contradictory entries (same slot, values differing
/// by more than 1e-12) are rejected.
LieAlgebra make_algebra(const std::string& name,
                        const std::vector<std::string>& basis,
                        const std::vector<BracketEntry>& entries,
                        std::optional<std::vector<int>> dagger = std::nullopt);

/// Bracket of two coefficient vectors: (u, v) -> sum_{a,b} u_a v_b c[a][b][.]
Eigen::VectorXd bracket(const LieAlgebra& L, const Eigen::VectorXd& u,
                        const Eigen::VectorXd& v);

/// Max-norm of the cyclic Jacobi sum over all basis triples; 0 for a valid
/// Lie algebra up to float noise.
double jacobi_defect(const LieAlgebra& L);

/// Max-norm of the symmetric part of the structure tensor.
double antisymmetry_defect(const LieAlgebra& L);

/// Adjoint matrices (ad_a)(k,b) = c[a][b][k], as real dense matrices.
std::vector<Eigen::MatrixXd> adjoint_matrices(const LieAlgebra& L);

/// Killing form K(a,b) = trace(ad_a ad_b).
Eigen::MatrixXd killing_form(const LieAlgebra& L);

/// Rank/nullity invariants decided by singular values with relative
/// threshold tol (default 1e-9).
ClassificationReport classify(const LieAlgebra& L, double tol = 1e-9);

/// Max-norm distance between structure tensors; requires identical bases.
double structure_distance(const LieAlgebra& L1, const LieAlgebra& L2);

/// Structure tensor in the basis f_i = sum_j M(j,i) e_j.
LieAlgebra change_of_basis(const LieAlgebra& L, const Eigen::MatrixXd& M);

/// Heisenberg algebra dH(N) on basis (q1..qN, p1..pN, r), [q_n, p_n] = r.
LieAlgebra heisenberg_algebra(int n_pairs);

/// so(3) with cyclic relations [J1,J2]=J3 etc.
LieAlgebra so3_algebra();

/// so(2,1): [J1,J2]=J3, [J2,J3]=J1, [J3,J1]=-J2.
LieAlgebra so21_algebra();

/// Orthogonal algebra d so(eta) on generators L_{ab}, a<b, for a diagonal
/// metric eta; labels are "L(a,b)" over the given axis labels.
LieAlgebra orthogonal_algebra(const Eigen::VectorXd& eta,
                              const std::vector<std::string>& axis_labels);

/// JSON algebra file IO (format: {"name", "basis", "brackets", "dagger"}).
LieAlgebra load_algebra(const std::string& path);
LieAlgebra parse_algebra(const std::string& json_text);

}  // namespace liekit

#endif
