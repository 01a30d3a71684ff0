#include "liekit/occupation.hpp"

#include <cmath>
#include <stdexcept>

namespace liekit {

namespace {

void enumerate(int modes, int remaining, int mode, std::vector<int>& occ,
               int min_total, int placed,
               std::vector<std::vector<int>>& out) {
  if (mode == modes - 1) {
    if (placed + remaining >= min_total) {
      occ[mode] = remaining;
      out.push_back(occ);
    }
    return;
  }
  for (int take = remaining; take >= 0; --take) {
    occ[mode] = take;
    enumerate(modes, remaining - take, mode + 1, occ, min_total, placed + take,
              out);
  }
}

}  // namespace

OccupationBasis::OccupationBasis(int modes, int min_total, int max_total)
    : modes_(modes), min_total_(min_total), max_total_(max_total) {
  if (modes < 1 || min_total < 0 || max_total < min_total)
    throw std::invalid_argument("OccupationBasis: bad arguments");
  // Fixed totals enumerated high to low so the all-in-mode-0 extreme state
  // of the top sector is first.
  for (int total = max_total; total >= min_total; --total) {
    std::vector<int> occ(modes, 0);
    enumerate(modes, total, 0, occ, 0, 0, states_);
  }
  for (long i = 0; i < size(); ++i) index_[states_[i]] = i;
}

long OccupationBasis::index_of(const std::vector<int>& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end())
    throw std::invalid_argument("OccupationBasis: state outside basis");
  return it->second;
}

Eigen::VectorXcd OccupationBasis::lift_apply(const Eigen::MatrixXcd& A,
                                             const Eigen::VectorXcd& v) const {
  if (A.rows() != modes_ || A.cols() != modes_ || v.size() != size())
    throw std::invalid_argument("lift_apply: dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(size());
  std::vector<int> target;
  for (long s = 0; s < size(); ++s) {
    const std::complex<double> amp = v[s];
    if (amp == std::complex<double>(0.0)) continue;
    const auto& occ = states_[s];
    for (int j = 0; j < modes_; ++j) {
      if (occ[j] == 0) continue;
      for (int i = 0; i < modes_; ++i) {
        const std::complex<double> aij = A(i, j);
        if (aij == std::complex<double>(0.0)) continue;
        if (i == j) {
          out[s] += amp * aij * static_cast<double>(occ[j]);
        } else {
          target = occ;
          target[j] -= 1;
          target[i] += 1;
          const double w =
              std::sqrt(static_cast<double>(occ[j]) * (occ[i] + 1));
          out[index_of(target)] += amp * aij * w;
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXcd OccupationBasis::lift_matrix(const Eigen::MatrixXcd& A) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size(), size());
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(size());
  for (long s = 0; s < size(); ++s) {
    e[s] = 1.0;
    out.col(s) = lift_apply(A, e);
    e[s] = 0.0;
  }
  return out;
}

long bosonic_dimension(int modes, int degree) {
  double v = 1.0;
  for (int i = 1; i <= degree; ++i)
    v = v * (modes - 1 + i) / i;
  const double r = std::round(v);
  return r > 1e17 ? static_cast<long>(1e17) : static_cast<long>(r);
}

}  // namespace liekit
