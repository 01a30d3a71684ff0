#ifndef LIEKIT_HOMOTOPY_HPP
#define LIEKIT_HOMOTOPY_HPP

#include "liekit/lie_algebra.hpp"

#include <string>
#include <vector>

namespace liekit {

enum class Signature { Compact, Minkowski51, Split33, Split };

Signature parse_signature(const std::string& tag);
Eigen::VectorXd signature_metric6(Signature sig);

/// A contraction/simplification path realized as a generalized diagonal
/// scaling of a fixed simple structure tensor: generator i carries weight
/// w_i(s) = s^exponents[i], so entry c_s[a][b][k] = s^(e_a+e_b-e_k) c[a][b][k].
/// Jacobi holds identically along the path; the s=0 endpoint is exact.
struct HomotopyPath {
  std::string name;
  double s_max = 1.0;
  LieAlgebra base;                // structure at s = s_max
  Eigen::VectorXd exponents;      // scaling exponent per generator
  LieAlgebra endpoint_singular;   // exact s = 0 tensor
  std::string simple_family;      // description of the s > 0 algebra

  LieAlgebra evaluate(double s) const;
};

struct PathReportRow {
  double s;
  double jacobi;
  int killing_rank;
  int center_dim;
  double distance_to_singular;
  double regulator_residual;  // max entry over brackets that die at s = 0
};

struct PathReport {
  std::vector<PathReportRow> rows;
};

/// General scaling contraction; entries whose scaling exponent is negative
/// would diverge as s -> 0 and are rejected.
HomotopyPath scaling_contraction(const LieAlgebra& L,
                                 const Eigen::VectorXd& exponents,
                                 const std::string& name = "scaling");

/// The 3-dimensional oscillator simplification on basis (q, p, r):
/// s = 0 is dH(1), s = 1 is so(3) (compact) or so(2,1) (split).
HomotopyPath segal_path(Signature sig);

/// 15-dimensional space-time path: the orthogonal algebra on axes
/// (0,1,2,3,X,Y) relabeled to (L_{mu nu}, x^mu, p_mu, r) and scaled with
/// weights (1, s, s, s^2); s = 0 reproduces the singular relations exactly.
HomotopyPath stime_path(Signature sig);

/// Near-bosonic path on N modes: compact orthogonal algebra on axes
/// (1..N, X', Y'); s = 0 restricted to (q, p, r) is canonical, with the
/// rotation generators L_{mn} surviving as regulators.
HomotopyPath boson_path(int modes);

PathReport path_report(const HomotopyPath& path, int samples);

}  // namespace liekit

#endif
