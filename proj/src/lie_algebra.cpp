#include "liekit/lie_algebra.hpp"

#include "json.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liekit {

int LieAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i] == label) return i;
  throw std::invalid_argument("unknown basis label: " + label);
}

LieAlgebra make_algebra(const std::string& name,
                        const std::vector<std::string>& basis,
                        const std::vector<BracketEntry>& entries,
                        std::optional<std::vector<int>> dagger) {
  std::set<std::string> seen;
  for (const auto& l : basis)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate basis label: " + l);

  LieAlgebra L;
  L.name = name;
  L.basis = basis;
  const int n = L.dim();
  L.structure.assign(n, Eigen::MatrixXd::Zero(n, n));
  if (dagger) {
    if (static_cast<int>(dagger->size()) != n)
      throw std::invalid_argument("dagger signature length mismatch");
    L.dagger_signature = dagger;
  }

  // Track which slots were set, so equal duplicates pass and conflicting
  // ones (directly or through antisymmetric completion) are rejected.
  std::vector<Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic>> set_mask(
      n, Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n));
  auto put = [&](int a, int b, int k, double v) {
    if (set_mask[a](b, k)) {
      if (std::abs(L.structure[a](b, k) - v) > 1e-12) {
        std::ostringstream os;
        os << "contradictory entries for [" << L.basis[a] << ", " << L.basis[b]
           << "] -> " << L.basis[k];
        throw std::invalid_argument(os.str());
      }
      return;
    }
    L.structure[a](b, k) = v;
    set_mask[a](b, k) = 1;
  };

  for (const auto& [la, lb, lk, v] : entries) {
    const int a = L.index_of(la), b = L.index_of(lb), k = L.index_of(lk);
    if (a == b && v != 0.0)
      throw std::invalid_argument("nonzero bracket [x, x] for label " + la);
    put(a, b, k, v);
    put(b, a, k, -v);
  }
  return L;
}

Eigen::VectorXd bracket(const LieAlgebra& L, const Eigen::VectorXd& u,
                        const Eigen::VectorXd& v) {
  const int n = L.dim();
  if (u.size() != n || v.size() != n)
    throw std::invalid_argument("bracket: dimension mismatch");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < n; ++a) {
    if (u[a] == 0.0) continue;
    out.noalias() += u[a] * (L.structure[a].transpose() * v);
  }
  return out;
}

double jacobi_defect(const LieAlgebra& L) {
  // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] applied to basis vectors equals the
  // columns of ad_a ad_b - ad_b ad_a - ad_{[a,b]}.
  const auto ad = adjoint_matrices(L);
  const int n = L.dim();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXd m = ad[a] * ad[b] - ad[b] * ad[a];
      for (int k = 0; k < n; ++k) m -= L.c(a, b, k) * ad[k];
      worst = std::max(worst, m.cwiseAbs().maxCoeff());
    }
  return worst;
}

double antisymmetry_defect(const LieAlgebra& L) {
  const int n = L.dim();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(0.5 * (L.c(a, b, k) + L.c(b, a, k))));
  return worst;
}

std::vector<Eigen::MatrixXd> adjoint_matrices(const LieAlgebra& L) {
  const int n = L.dim();
  std::vector<Eigen::MatrixXd> ad(n, Eigen::MatrixXd::Zero(n, n));
  for (int a = 0; a < n; ++a)
    ad[a] = L.structure[a].transpose();  // (ad_a)(k,b) = c[a][b][k]
  return ad;
}

Eigen::MatrixXd killing_form(const LieAlgebra& L) {
  const auto ad = adjoint_matrices(L);
  const int n = L.dim();
  Eigen::MatrixXd K(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      K(a, b) = K(b, a) = (ad[a] * ad[b]).trace();
  return K;
}

namespace {

int rank_by_svd(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  // A top singular value at noise level means the matrix is zero: a purely
  // relative threshold would count round-off as full rank.
  if (sv.size() == 0 || sv[0] <= tol) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * sv[0]) ++r;
  return r;
}

}  // namespace

ClassificationReport classify(const LieAlgebra& L, double tol) {
  if (tol <= 0) throw std::invalid_argument("classify: tol must be positive");
  const int n = L.dim();
  ClassificationReport rep;
  rep.killing_rank = rank_by_svd(killing_form(L), tol);

  // Center: nullity of the stacked adjoint map a -> vec(ad_a).
  const auto ad = adjoint_matrices(L);
  Eigen::MatrixXd stacked(n * n, n);
  for (int a = 0; a < n; ++a)
    stacked.col(a) = Eigen::Map<const Eigen::VectorXd>(ad[a].data(), n * n);
  rep.center_dim = n - rank_by_svd(stacked, tol);

  // Derived algebra: rank of the span of all brackets.
  Eigen::MatrixXd spans(n * (n - 1) / 2, n);
  int row = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) spans.row(row++) = L.structure[a].row(b);
  rep.derived_dim = rank_by_svd(spans, tol);

  rep.semisimple = (rep.killing_rank == n);
  rep.defects["antisymmetry"] = antisymmetry_defect(L);
  rep.defects["jacobi"] = jacobi_defect(L);
  return rep;
}

double structure_distance(const LieAlgebra& L1, const LieAlgebra& L2) {
  if (L1.basis != L2.basis)
    throw std::invalid_argument("structure_distance: basis mismatch");
  double worst = 0.0;
  for (int a = 0; a < L1.dim(); ++a)
    worst = std::max(worst,
                     (L1.structure[a] - L2.structure[a]).cwiseAbs().maxCoeff());
  return worst;
}

LieAlgebra change_of_basis(const LieAlgebra& L, const Eigen::MatrixXd& M) {
  const int n = L.dim();
  const Eigen::MatrixXd W = M.inverse();
  LieAlgebra out = L;
  out.structure.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int a = 0; a < n; ++a) {
    // T(b,m) = sum_{ij} M(i,a) M(j,b) c[i][j][m]
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      if (M(i, a) != 0.0) T.noalias() += M(i, a) * (M.transpose() * L.structure[i]);
    out.structure[a] = T * W.transpose();  // c'(b,k) = sum_m T(b,m) W(k,m)
  }
  return out;
}

LieAlgebra heisenberg_algebra(int n_pairs) {
  if (n_pairs < 1) throw std::invalid_argument("heisenberg: n_pairs >= 1");
  std::vector<std::string> basis;
  for (int i = 1; i <= n_pairs; ++i) basis.push_back("q" + std::to_string(i));
  for (int i = 1; i <= n_pairs; ++i) basis.push_back("p" + std::to_string(i));
  basis.push_back("r");
  std::vector<BracketEntry> entries;
  for (int i = 1; i <= n_pairs; ++i)
    entries.emplace_back("q" + std::to_string(i), "p" + std::to_string(i), "r",
                         1.0);
  return make_algebra("dH(" + std::to_string(n_pairs) + ")", basis, entries);
}

LieAlgebra so3_algebra() {
  return make_algebra("so(3)", {"J1", "J2", "J3"},
                      {{"J1", "J2", "J3", 1.0},
                       {"J2", "J3", "J1", 1.0},
                       {"J3", "J1", "J2", 1.0}});
}

LieAlgebra so21_algebra() {
  return make_algebra("so(2,1)", {"J1", "J2", "J3"},
                      {{"J1", "J2", "J3", 1.0},
                       {"J2", "J3", "J1", 1.0},
                       {"J3", "J1", "J2", -1.0}});
}

LieAlgebra orthogonal_algebra(const Eigen::VectorXd& eta,
                              const std::vector<std::string>& axis_labels) {
  const int d = static_cast<int>(eta.size());
  if (static_cast<int>(axis_labels.size()) != d)
    throw std::invalid_argument("orthogonal_algebra: label count mismatch");
  std::vector<std::string> basis;
  std::vector<std::pair<int, int>> planes;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      basis.push_back("L(" + axis_labels[a] + "," + axis_labels[b] + ")");
      planes.emplace_back(a, b);
    }
  const int n = static_cast<int>(basis.size());
  auto plane_index = [&](int a, int b) {
    for (int i = 0; i < n; ++i)
      if (planes[i] == std::make_pair(a, b)) return i;
    return -1;
  };

  LieAlgebra L;
  L.name = "dSO(" + std::to_string(d) + ")";
  L.basis = basis;
  L.structure.assign(n, Eigen::MatrixXd::Zero(n, n));
  // [L_ab, L_cd] = eta_bc L_ad - eta_ac L_bd - eta_bd L_ac + eta_ad L_bc
  auto add_term = [&](int i, int j, int r, int s, double coeff) {
    if (r == s || coeff == 0.0) return;
    double sign = 1.0;
    if (r > s) {
      std::swap(r, s);
      sign = -1.0;
    }
    L.structure[i](j, plane_index(r, s)) += sign * coeff;
  };
  for (int i = 0; i < n; ++i) {
    auto [a, b] = planes[i];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto [c, d2] = planes[j];
      if (b == c) add_term(i, j, a, d2, eta[b]);
      if (a == c) add_term(i, j, b, d2, -eta[a]);
      if (b == d2) add_term(i, j, a, c, -eta[b]);
      if (a == d2) add_term(i, j, b, c, eta[a]);
    }
  }
  L.dagger_signature = std::vector<int>(n, -1);
  return L;
}

LieAlgebra parse_algebra(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      const std::string a = b.at(0).get<std::string>();
      const std::string c = b.at(1).get<std::string>();
      for (const auto& term : b.at(2))
        entries.emplace_back(a, c, term.at(0).get<std::string>(),
                             term.at(1).get<double>());
    }
  }
  std::optional<std::vector<int>> dagger;
  if (j.contains("dagger")) {
    std::vector<int> d;
    for (const auto& s : j.at("dagger")) {
      const std::string v = s.get<std::string>();
      if (v == "+")
        d.push_back(1);
      else if (v == "-")
        d.push_back(-1);
      else
        throw std::invalid_argument("dagger entries must be \"+\" or \"-\"");
    }
    dagger = d;
  }
  return make_algebra(j.value("name", std::string("unnamed")), basis, entries,
                      dagger);
}

LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

}  // namespace liekit
