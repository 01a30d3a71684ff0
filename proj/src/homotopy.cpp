#include "liekit/homotopy.hpp"

#include <cmath>
#include <stdexcept>

namespace liekit {

Signature parse_signature(const std::string& tag) {
  if (tag == "compact") return Signature::Compact;
  if (tag == "5-1" || tag == "minkowski") return Signature::Minkowski51;
  if (tag == "3-3") return Signature::Split33;
  if (tag == "split") return Signature::Split;
  throw std::invalid_argument("unknown signature tag: " + tag);
}

Eigen::VectorXd signature_metric6(Signature sig) {
  Eigen::VectorXd eta = Eigen::VectorXd::Ones(6);
  switch (sig) {
    case Signature::Compact:
      break;
    case Signature::Minkowski51:
      eta[0] = -1.0;
      break;
    case Signature::Split33:
      eta[0] = eta[1] = eta[2] = -1.0;
      break;
    default:
      throw std::invalid_argument("signature not defined on 6 axes");
  }
  return eta;
}

LieAlgebra HomotopyPath::evaluate(double s) const {
  if (s < 0.0 || s > s_max)
    throw std::invalid_argument("evaluate: s outside path range");
  const int n = base.dim();
  LieAlgebra out = base;
  out.name = name + "(s=" + std::to_string(s) + ")";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const double c = base.c(a, b, k);
        if (c == 0.0) continue;
        const double e = exponents[a] + exponents[b] - exponents[k];
        double scale;
        if (s == 0.0)
          scale = (std::abs(e) <= 1e-9) ? 1.0 : 0.0;
        else
          scale = std::pow(s, e);
        out.structure[a](b, k) = scale * c;
      }
  return out;
}

HomotopyPath scaling_contraction(const LieAlgebra& L,
                                 const Eigen::VectorXd& exponents,
                                 const std::string& name) {
  const int n = L.dim();
  if (exponents.size() != n)
    throw std::invalid_argument("scaling_contraction: exponent count mismatch");
  HomotopyPath path;
  path.name = name;
  path.base = L;
  path.exponents = exponents;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        if (L.c(a, b, k) == 0.0) continue;
        const double e = exponents[a] + exponents[b] - exponents[k];
        if (e < -1e-9)
          throw std::invalid_argument(
              "scaling_contraction: entry [" + L.basis[a] + ", " + L.basis[b] +
              "] -> " + L.basis[k] + " diverges as s -> 0");
      }
  path.endpoint_singular = path.evaluate(0.0);
  path.endpoint_singular.name = L.name + " contracted";
  path.simple_family = L.name;
  return path;
}

HomotopyPath segal_path(Signature sig) {
  LieAlgebra base;
  if (sig == Signature::Compact) {
    base = make_algebra("so(3)", {"q", "p", "r"},
                        {{"q", "p", "r", 1.0},
                         {"p", "r", "q", 1.0},
                         {"r", "q", "p", 1.0}});
  } else if (sig == Signature::Split) {
    base = make_algebra("so(2,1)", {"q", "p", "r"},
                        {{"q", "p", "r", 1.0},
                         {"p", "r", "q", 1.0},
                         {"r", "q", "p", -1.0}});
  } else {
    throw std::invalid_argument("segal_path: signature must be compact|split");
  }
  Eigen::VectorXd e(3);
  e << 1.0, 1.0, 2.0;
  auto path = scaling_contraction(base, e, "segal");
  path.simple_family = base.name;
  path.endpoint_singular.name = "dH(1)";
  return path;
}

namespace {

struct PlaneSpec {
  std::string label;
  int a;
  int b;
  double sign;
  double exponent;
};

/// Lie algebra on basis g_i = sign_i * L_{a_i b_i} inside dSO(eta).
LieAlgebra algebra_on_planes(const Eigen::VectorXd& eta,
                             const std::vector<PlaneSpec>& planes,
                             const std::string& name) {
  const int n = static_cast<int>(planes.size());
  auto find_plane = [&](int r, int s, double& sign) {
    if (r > s) {
      std::swap(r, s);
      sign = -sign;
    }
    for (int i = 0; i < n; ++i)
      if (planes[i].a == r && planes[i].b == s) {
        sign /= planes[i].sign;
        return i;
      }
    throw std::logic_error("algebra_on_planes: incomplete plane set");
  };
  LieAlgebra L;
  L.name = name;
  for (const auto& ps : planes) L.basis.push_back(ps.label);
  L.structure.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int a = planes[i].a, b = planes[i].b;
      const int c = planes[j].a, d = planes[j].b;
      const double pref = planes[i].sign * planes[j].sign;
      // [L_ab, L_cd] = eta_bc L_ad - eta_ac L_bd - eta_bd L_ac + eta_ad L_bc
      auto add = [&](int r, int s, double coeff) {
        if (r == s || coeff == 0.0) return;
        double sign = 1.0;
        const int k = find_plane(r, s, sign);
        L.structure[i](j, k) += pref * coeff * sign;
      };
      if (b == c) add(a, d, eta[b]);
      if (a == c) add(b, d, -eta[a]);
      if (b == d) add(a, c, -eta[b]);
      if (a == d) add(b, c, eta[a]);
    }
  L.dagger_signature = std::vector<int>(n, -1);
  return L;
}

}  // namespace

HomotopyPath stime_path(Signature sig) {
  const Eigen::VectorXd eta = signature_metric6(sig);
  const int X = 4, Y = 5;
  std::vector<PlaneSpec> planes;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      planes.push_back({"L" + std::to_string(mu) + std::to_string(nu), mu, nu,
                        1.0, 0.0});
  for (int mu = 0; mu < 4; ++mu)
    planes.push_back({"x" + std::to_string(mu), mu, X, 1.0, 1.0});
  for (int mu = 0; mu < 4; ++mu)
    planes.push_back({"p" + std::to_string(mu), mu, Y, 1.0, 1.0});
  planes.push_back({"r", X, Y, -1.0, 2.0});  // r = L_YX, so [x, p] = +eta r

  LieAlgebra base = algebra_on_planes(eta, planes, "dSO(6)");
  Eigen::VectorXd e(base.dim());
  for (int i = 0; i < base.dim(); ++i) e[i] = planes[i].exponent;
  auto path = scaling_contraction(base, e, "stime");
  path.simple_family = (sig == Signature::Compact)    ? "dSO(6)"
                       : (sig == Signature::Minkowski51) ? "dSO(5,1)"
                                                         : "dSO(3,3)";
  path.endpoint_singular.name = "Lie(x, p, L, r)";
  return path;
}

HomotopyPath boson_path(int modes) {
  if (modes < 1) throw std::invalid_argument("boson_path: modes >= 1");
  const int N = modes;
  const int Xp = N, Yp = N + 1;
  Eigen::VectorXd eta = Eigen::VectorXd::Ones(N + 2);
  std::vector<PlaneSpec> planes;
  for (int m = 0; m < N; ++m)
    planes.push_back({"q" + std::to_string(m + 1), m, Xp, 1.0, 1.0});
  for (int m = 0; m < N; ++m)
    planes.push_back({"p" + std::to_string(m + 1), m, Yp, -1.0, 1.0});
  for (int m = 0; m < N; ++m)
    for (int n2 = m + 1; n2 < N; ++n2)
      planes.push_back({"L" + std::to_string(m + 1) + std::to_string(n2 + 1),
                        m, n2, 1.0, 0.0});
  planes.push_back({"r", Xp, Yp, 1.0, 2.0});

  LieAlgebra base =
      algebra_on_planes(eta, planes, "dSO(" + std::to_string(N + 2) + ")");
  Eigen::VectorXd e(base.dim());
  for (int i = 0; i < base.dim(); ++i) e[i] = planes[i].exponent;
  auto path = scaling_contraction(base, e, "boson");
  path.simple_family = base.name;
  path.endpoint_singular.name = "dH(" + std::to_string(N) + ") + rotations";
  return path;
}

PathReport path_report(const HomotopyPath& path, int samples) {
  if (samples < 2) throw std::invalid_argument("path_report: samples >= 2");
  PathReport report;
  const int n = path.base.dim();
  for (int i = 0; i < samples; ++i) {
    const double s = path.s_max * i / (samples - 1);
    const LieAlgebra L = path.evaluate(s);
    const auto cls = classify(L);
    PathReportRow row;
    row.s = s;
    row.jacobi = cls.defects.at("jacobi");
    row.killing_rank = cls.killing_rank;
    row.center_dim = cls.center_dim;
    row.distance_to_singular = structure_distance(L, path.endpoint_singular);
    row.regulator_residual = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k)
          if (path.endpoint_singular.c(a, b, k) == 0.0)
            row.regulator_residual =
                std::max(row.regulator_residual, std::abs(L.c(a, b, k)));
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace liekit
