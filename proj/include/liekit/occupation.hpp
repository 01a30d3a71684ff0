#ifndef LIEKIT_OCCUPATION_HPP
#define LIEKIT_OCCUPATION_HPP

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <vector>

namespace liekit {

/// Bosonic occupation-number basis over a fixed number of modes, with total
/// occupation restricted to [min_total, max_total]. States are enumerated in
/// lexicographically decreasing order, so for a fixed total the state with
/// everything in mode 0 comes first.
class OccupationBasis {
 public:
  OccupationBasis(int modes, int min_total, int max_total);

  int modes() const { return modes_; }
  long size() const { return static_cast<long>(states_.size()); }
  const std::vector<int>& state(long i) const { return states_[i]; }
  long index_of(const std::vector<int>& occ) const;

  /// Applies the number-conserving bilinear lift dGamma(A) = sum A_ij a_i+ a_j
  /// (unit ladder normalization) to a coefficient vector.
  Eigen::VectorXcd lift_apply(const Eigen::MatrixXcd& A,
                              const Eigen::VectorXcd& v) const;

  /// Dense matrix of dGamma(A).
  Eigen::MatrixXcd lift_matrix(const Eigen::MatrixXcd& A) const;

 private:
  int modes_;
  int min_total_;
  int max_total_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, long> index_;
};

/// C(n+k-1, k) as long, with overflow saturation.
long bosonic_dimension(int modes, int degree);

}  // namespace liekit

#endif
