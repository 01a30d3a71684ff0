#include "liekit/stime.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <stdexcept>

namespace liekit {

namespace {

constexpr int kAxisX = 4;
constexpr int kAxisY = 5;

std::string l_label(int a, int b) {
  return "L" + std::to_string(a) + std::to_string(b);
}

/// Sparse occupation-number state over 6 modes: coefficient per occupation
/// vector. Lets the symmetric power act matrix-free, so k can be large.
using OccState = std::map<std::vector<int>, Complex>;

OccState lift_apply(const Eigen::MatrixXcd& a, const OccState& v) {
  OccState out;
  for (const auto& [occ, amp] : v)
    for (int j = 0; j < 6; ++j) {
      if (occ[j] == 0) continue;
      for (int i = 0; i < 6; ++i) {
        const Complex aij = a(i, j);
        if (aij == Complex(0.0)) continue;
        if (i == j) {
          out[occ] += amp * aij * static_cast<double>(occ[j]);
        } else {
          std::vector<int> t = occ;
          t[j] -= 1;
          t[i] += 1;
          out[t] += amp * aij *
                    std::sqrt(static_cast<double>(occ[j]) * (occ[i] + 1));
        }
      }
    }
  return out;
}

OccState axpy(const Complex& alpha, const OccState& x, const OccState& y) {
  OccState out = y;
  for (const auto& [occ, amp] : x) out[occ] += alpha * amp;
  return out;
}

double occ_norm(const OccState& v) {
  double n2 = 0.0;
  for (const auto& [occ, amp] : v) n2 += std::norm(amp);
  return std::sqrt(n2);
}

Complex occ_dot(const OccState& a, const OccState& b) {
  Complex d(0.0, 0.0);
  for (const auto& [occ, amp] : a) {
    auto it = b.find(occ);
    if (it != b.end()) d += std::conj(amp) * it->second;
  }
  return d;
}

/// Unitary change of single-particle frame making i*L_{XY} diagonal:
/// mode 0 = (e_X - i e_Y)/sqrt(2) (weight +1), modes 1..4 = spatial axes
/// 0..3 (weight 0), mode 5 = (e_X + i e_Y)/sqrt(2) (weight -1).
Eigen::MatrixXcd weight_frame() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex iu(0.0, 1.0);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(6, 6);
  u(kAxisX, 0) = s;
  u(kAxisY, 0) = -iu * s;
  for (int mu = 0; mu < 4; ++mu) u(mu, mu + 1) = 1.0;
  u(kAxisX, 5) = s;
  u(kAxisY, 5) = iu * s;
  return u;
}

/// Single-particle generator matrices of compact dSO(6) in the weight frame,
/// keyed by plane (a < b).
std::map<std::pair<int, int>, Eigen::MatrixXcd> weight_frame_planes() {
  const Representation def =
      defining_rep(Eigen::VectorXd::Ones(6),
                   {"0", "1", "2", "3", "X", "Y"});
  const Eigen::MatrixXcd u = weight_frame();
  std::map<std::pair<int, int>, Eigen::MatrixXcd> out;
  for (size_t g = 0; g < def.plane->size(); ++g)
    out[(*def.plane)[g]] = u.adjoint() * def.matrices[g] * u;
  return out;
}

std::vector<int> vac_occ(int k) {
  std::vector<int> occ(6, 0);
  occ[0] = k;
  return occ;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double max_norm(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

MatrixXcd comm(const MatrixXcd& a, const MatrixXcd& b) {
  return a * b - b * a;
}

}  // namespace

LieAlgebra lie15(Signature sig) {
  const Eigen::VectorXd eta6 = signature_metric6(sig);
  const Eigen::VectorXd eta = eta6.head(4);
  std::vector<std::pair<int, int>> lor;
  std::vector<std::string> basis;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      lor.emplace_back(a, b);
      basis.push_back(l_label(a, b));
    }
  for (int mu = 0; mu < 4; ++mu) basis.push_back("x" + std::to_string(mu));
  for (int mu = 0; mu < 4; ++mu) basis.push_back("p" + std::to_string(mu));
  basis.push_back("r");

  std::vector<BracketEntry> entries;
  auto add_l = [&](const std::string& lhs1, const std::string& lhs2, int a,
                   int b, double coeff) {
    if (a == b || coeff == 0.0) return;
    double sign = 1.0;
    if (a > b) {
      std::swap(a, b);
      sign = -1.0;
    }
    entries.emplace_back(lhs1, lhs2, l_label(a, b), sign * coeff);
  };
  // Lorentz sector, the orthogonal relations on the 4 space-time axes.
  for (auto [a, b] : lor)
    for (auto [c, d] : lor) {
      if (a == c && b == d) continue;
      if (std::make_pair(a, b) > std::make_pair(c, d)) continue;
      const std::string lhs1 = l_label(a, b), lhs2 = l_label(c, d);
      if (b == c) add_l(lhs1, lhs2, a, d, eta[b]);
      if (a == c) add_l(lhs1, lhs2, b, d, -eta[a]);
      if (b == d) add_l(lhs1, lhs2, a, c, -eta[b]);
      if (a == d) add_l(lhs1, lhs2, b, c, eta[a]);
    }
  // Lorentz action on x and p: [L_ab, v_c] = eta_bc v_a - eta_ac v_b.
  for (const std::string v : {"x", "p"})
    for (auto [a, b] : lor)
      for (int c = 0; c < 4; ++c) {
        if (b == c)
          entries.emplace_back(l_label(a, b), v + std::to_string(c),
                               v + std::to_string(a), eta[b]);
        if (a == c)
          entries.emplace_back(l_label(a, b), v + std::to_string(c),
                               v + std::to_string(b), -eta[a]);
      }
  // Canonical sector: [x_mu, p_nu] = eta_{mu nu} r; r central; [x,x]=[p,p]=0.
  for (int mu = 0; mu < 4; ++mu)
    entries.emplace_back("x" + std::to_string(mu), "p" + std::to_string(mu),
                         "r", eta[mu]);
  return make_algebra("Lie15", basis, entries);
}

QuantumConstants stime_constants(int k, double hbar) {
  if (k < 1) throw std::invalid_argument("stime_constants: k >= 1");
  QuantumConstants qc;
  qc.hbar = hbar;
  qc.delta_x = qc.delta_p = std::sqrt(hbar / k);
  qc.delta_q = qc.delta_x;
  qc.delta_r = 1.0 / (static_cast<double>(k) * k);
  qc.l_X = k;
  return qc;
}

StimeOperators stime_operators(Signature sig, int rep_power,
                               const QuantumConstants& qc) {
  if (rep_power < 1)
    throw std::invalid_argument("stime_operators: rep_power >= 1");
  if (!qc.l_X || *qc.l_X != rep_power)
    throw std::invalid_argument(
        "stime_operators: l_X must be set to the symmetric power");
  qc.validate();

  StimeOperators ops;
  ops.signature = sig;
  ops.qc = qc;
  ops.l = rep_power;
  const Eigen::VectorXd eta6 = signature_metric6(sig);
  ops.eta4 = eta6.head(4);
  ops.rep = defining_rep(eta6, {"0", "1", "2", "3", "X", "Y"});
  if (rep_power > 1) ops.rep = sym_power_rep(ops.rep, rep_power);

  std::map<std::pair<int, int>, int> gen;
  for (size_t g = 0; g < ops.rep.plane->size(); ++g)
    gen[(*ops.rep.plane)[g]] = static_cast<int>(g);
  const auto mat = [&](int a, int b) -> const MatrixXcd& {
    return ops.rep.matrices[gen.at({a, b})];
  };
  for (int mu = 0; mu < 4; ++mu) ops.x.push_back(qc.delta_x * mat(mu, kAxisX));
  for (int mu = 0; mu < 4; ++mu) ops.p.push_back(qc.delta_p * mat(mu, kAxisY));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) ops.lorentz.push_back(mat(a, b));
  ops.r = -qc.delta_r * mat(kAxisX, kAxisY);  // r = dr L_{YX}
  ops.i_op = ops.r / (rep_power * qc.delta_r);
  return ops;
}

std::vector<ResidualRow> residuals_vs_singular(const StimeOperators& ops) {
  if (ops.signature != Signature::Compact)
    throw std::invalid_argument(
        "residuals_vs_singular: compact signature required");
  const Eigen::VectorXd& eta = ops.eta4;
  std::vector<ResidualRow> rows;

  double xx = 0.0, pp = 0.0, xi = 0.0, pi = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      xx = std::max(xx, max_norm(comm(ops.x[mu], ops.x[nu])));
      pp = std::max(pp, max_norm(comm(ops.p[mu], ops.p[nu])));
    }
    xi = std::max(xi, max_norm(comm(ops.x[mu], ops.i_op)));
    pi = std::max(pi, max_norm(comm(ops.p[mu], ops.i_op)));
  }
  rows.push_back({"[x,x]", xx, "delta_x", 2.0});
  rows.push_back({"[p,p]", pp, "delta_p", 2.0});
  rows.push_back({"[x,i]", xi, "delta_x", 1.0});
  rows.push_back({"[p,i]", pi, "delta_p", 1.0});

  // [x, p] - i hbar eta on the near-extreme weight subspace of i L_{XY}
  // (weights l and l-1).
  const MatrixXcd weight_op = Complex(0.0, -1.0) * ops.i_op * ops.l;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(weight_op);
  double xp = 0.0;
  const Complex iu(0.0, 1.0);
  for (int v = 0; v < es.eigenvalues().size(); ++v) {
    if (es.eigenvalues()[v] < ops.l - 1 - 1e-8) continue;
    const VectorXcd w = es.eigenvectors().col(v);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const VectorXcd res = comm(ops.x[mu], ops.p[nu]) * w -
                              iu * ops.qc.hbar * eta[mu] *
                                  (mu == nu ? 1.0 : 0.0) * w;
        xp = std::max(xp, res.norm());
      }
  }
  rows.push_back({"[x,p]", xp, "1/l", 1.0});

  // Lorentz sector: exact by construction.
  double ll = 0.0, lx = 0.0, lp = 0.0, li = 0.0;
  int g = 0;
  std::vector<std::pair<int, int>> lor;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) lor.emplace_back(a, b);
  for (auto [a, b] : lor) {
    int h = 0;
    for (auto [c, d] : lor) {
      if (h > g) {
        MatrixXcd m = comm(ops.lorentz[g], ops.lorentz[h]);
        auto sub = [&](int r, int s, double coeff) {
          if (r == s || coeff == 0.0) return;
          double sign = 1.0;
          if (r > s) {
            std::swap(r, s);
            sign = -1.0;
          }
          int idx = 0;
          for (auto [u2, v2] : lor) {
            if (u2 == r && v2 == s) break;
            ++idx;
          }
          m -= sign * coeff * ops.lorentz[idx];
        };
        if (b == c) sub(a, d, eta[b]);
        if (a == c) sub(b, d, -eta[a]);
        if (b == d) sub(a, c, -eta[b]);
        if (a == d) sub(b, c, eta[a]);
        ll = std::max(ll, max_norm(m));
      }
      ++h;
    }
    for (int c = 0; c < 4; ++c) {
      MatrixXcd mx = comm(ops.lorentz[g], ops.x[c]);
      MatrixXcd mp = comm(ops.lorentz[g], ops.p[c]);
      if (b == c) {
        mx -= eta[b] * ops.x[a];
        mp -= eta[b] * ops.p[a];
      }
      if (a == c) {
        mx += eta[a] * ops.x[b];
        mp += eta[a] * ops.p[b];
      }
      lx = std::max(lx, max_norm(mx));
      lp = std::max(lp, max_norm(mp));
    }
    li = std::max(li, max_norm(comm(ops.lorentz[g], ops.i_op)));
    ++g;
  }
  rows.push_back({"[L,L]", ll, "none", 0.0});
  rows.push_back({"[L,x]", lx, "none", 0.0});
  rows.push_back({"[L,p]", lp, "none", 0.0});
  rows.push_back({"[L,i]", li, "none", 0.0});
  return rows;
}

std::vector<ResidualSweepRow> residual_scaling_sweep(double hbar) {
  std::vector<ResidualSweepRow> rows;
  const int points = 8;

  // delta sweeps on the defining rep: delta_x = delta_p = t, delta_r scaled
  // to keep delta_x*delta_p = l_X*delta_r*hbar.
  std::vector<double> ts, xx, pp, xi, pi;
  std::vector<ResidualRow> base;
  for (int j = 0; j < points; ++j) {
    const double t = std::pow(0.5, j);
    QuantumConstants qc;
    qc.hbar = hbar;
    qc.delta_x = qc.delta_p = qc.delta_q = t;
    qc.delta_r = t * t / hbar;
    qc.l_X = 1;
    const auto ops = stime_operators(Signature::Compact, 1, qc);
    const auto res = residuals_vs_singular(ops);
    if (j == points - 1) base = res;
    ts.push_back(t);
    for (const auto& r : res) {
      if (r.relation == "[x,x]") xx.push_back(r.norm);
      if (r.relation == "[p,p]") pp.push_back(r.norm);
      if (r.relation == "[x,i]") xi.push_back(r.norm);
      if (r.relation == "[p,i]") pi.push_back(r.norm);
    }
  }
  rows.push_back({"[x,x]", xx.back(), "delta_x", 2.0, fit_slope(ts, xx)});
  rows.push_back({"[p,p]", pp.back(), "delta_p", 2.0, fit_slope(ts, pp)});
  rows.push_back({"[x,i]", xi.back(), "delta_x", 1.0, fit_slope(ts, xi)});
  rows.push_back({"[p,i]", pi.back(), "delta_p", 1.0, fit_slope(ts, pi)});

  // 1/l sweep for [x,p], matrix-free over k = 1, 2, 4, ..., 128 on the
  // near-extreme weight states (vacuum and the four one-spatial-quantum
  // states).
  const auto planes = weight_frame_planes();
  std::vector<double> invl, xp;
  const Complex iu(0.0, 1.0);
  for (int j = 0; j < points; ++j) {
    const int k = 1 << j;
    const QuantumConstants qc = stime_constants(k, hbar);
    double worst = 0.0;
    std::vector<OccState> states;
    states.push_back({{vac_occ(k), 1.0}});
    for (int mu = 0; mu < 4; ++mu) {
      std::vector<int> occ = vac_occ(k);
      occ[0] -= 1;
      occ[mu + 1] += 1;
      states.push_back({{occ, 1.0}});
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const Eigen::MatrixXcd xm = qc.delta_x * planes.at({mu, kAxisX});
        const Eigen::MatrixXcd pn = qc.delta_p * planes.at({nu, kAxisY});
        for (const auto& w : states) {
          OccState res = lift_apply(xm, lift_apply(pn, w));
          res = axpy(-1.0, lift_apply(pn, lift_apply(xm, w)), res);
          if (mu == nu) res = axpy(-iu * hbar, w, res);
          worst = std::max(worst, occ_norm(res));
        }
      }
    invl.push_back(1.0 / k);
    xp.push_back(worst);
  }
  rows.push_back({"[x,p]", xp.back(), "1/l", 1.0, fit_slope(invl, xp)});

  for (const auto& r : base)
    if (r.small_param == "none")
      rows.push_back({r.relation, r.norm, "none", 0.0, 0.0});
  return rows;
}

Lambda2Report lambda2_check_sym(int k) {
  if (k < 1) throw std::invalid_argument("lambda2_check_sym: k >= 1");
  const auto planes = weight_frame_planes();
  const OccState vac{{vac_occ(k), 1.0}};

  Lambda2Report rep;
  rep.k = k;
  rep.value = 0.0;
  for (const auto& [plane, a] : planes) {
    // -<(L_ab)^2> = ||L_ab vac||^2 for anti-Hermitian L_ab.
    const double n = occ_norm(lift_apply(a, vac));
    rep.value += n * n;
  }
  rep.target = static_cast<double>(k) * k;
  rep.ratio = rep.value / rep.target;
  rep.cross_term = 0.0;
  rep.cross_block = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const OccState xv = lift_apply(planes.at({mu, kAxisX}), vac);
    const OccState yv = lift_apply(planes.at({mu, kAxisY}), vac);
    rep.cross_term += -2.0 * occ_dot(xv, yv).real();
    rep.cross_block += std::pow(occ_norm(xv), 2) + std::pow(occ_norm(yv), 2);
  }
  return rep;
}

Lambda2Report lambda2_check(const StimeOperators& ops) {
  if (ops.signature != Signature::Compact)
    throw std::invalid_argument("lambda2_check: compact signature required");
  const MatrixXcd weight_op = Complex(0.0, -1.0) * ops.i_op * ops.l;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(weight_op);
  Eigen::Index top;
  es.eigenvalues().maxCoeff(&top);
  const VectorXcd vac = es.eigenvectors().col(top);

  Lambda2Report rep;
  rep.k = ops.l;
  rep.value = 0.0;
  for (const auto& m : ops.rep.matrices) rep.value += (m * vac).squaredNorm();
  rep.target = static_cast<double>(ops.l) * ops.l;
  rep.ratio = rep.value / rep.target;
  rep.cross_term = 0.0;
  rep.cross_block = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const VectorXcd xv = (ops.x[mu] / ops.qc.delta_x) * vac;
    const VectorXcd yv = (ops.p[mu] / ops.qc.delta_p) * vac;
    rep.cross_term += -2.0 * xv.dot(yv).real();
    rep.cross_block += xv.squaredNorm() + yv.squaredNorm();
  }
  return rep;
}

MatrixXcd wave_operator(const StimeOperators& ops, double m) {
  const int d = ops.rep.dim_rep();
  MatrixXcd out = MatrixXcd::Zero(d, d);
  for (int mu = 0; mu < 4; ++mu)
    out += (1.0 / ops.eta4[mu]) * ops.p[mu] * ops.i_op * ops.p[mu];
  out += (m * m) * ops.i_op;
  return out;
}

double commuting_triple_defect(const StimeOperators& ops) {
  const MatrixXcd& t = ops.x[0];
  const MatrixXcd& px = ops.p[1];
  const MatrixXcd& l23 = ops.lorentz[5];
  double worst = max_norm(comm(t, px));
  worst = std::max(worst, max_norm(comm(t, l23)));
  worst = std::max(worst, max_norm(comm(px, l23)));
  return worst;
}

int simplified_dimension(int n_x) {
  if (n_x < 1) throw std::invalid_argument("simplified_dimension: N_x >= 1");
  return 2 * n_x + 2;
}

}  // namespace liekit
