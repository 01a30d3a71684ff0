#include "liekit/quantify.hpp"

#include "liekit/occupation.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <map>
#include <stdexcept>

namespace liekit {

Sigma parse_sigma(const std::string& tag) {
  if (tag == "+" || tag == "plus" || tag == "boson") return Sigma::Plus;
  if (tag == "-" || tag == "minus" || tag == "fermion") return Sigma::Minus;
  if (tag == "0" || tag == "zero" || tag == "maxwellon") return Sigma::Zero;
  throw std::invalid_argument("unknown sigma tag: " + tag);
}

std::string sigma_tag(Sigma sigma) {
  switch (sigma) {
    case Sigma::Plus: return "+";
    case Sigma::Minus: return "-";
    default: return "0";
  }
}

namespace {

using Triplet = Eigen::Triplet<Complex>;

QuantifiedSystem quantify_bosonic(int dim_v, int cutoff, double hbar) {
  OccupationBasis basis(dim_v, 0, cutoff);
  QuantifiedSystem sys;
  sys.sigma = Sigma::Plus;
  sys.dim_v = dim_v;
  sys.cutoff = cutoff;
  sys.hbar = hbar;
  sys.space_dim = basis.size();
  sys.vacuum = VectorXcd::Zero(basis.size());
  sys.vacuum[basis.index_of(std::vector<int>(dim_v, 0))] = 1.0;
  sys.degree = Eigen::VectorXd::Zero(basis.size());
  for (long s = 0; s < basis.size(); ++s) {
    int total = 0;
    for (int o : basis.state(s)) total += o;
    sys.degree[s] = total;
  }
  for (int n = 0; n < dim_v; ++n) {
    std::vector<Triplet> up;
    for (long s = 0; s < basis.size(); ++s) {
      std::vector<int> occ = basis.state(s);
      int total = 0;
      for (int o : occ) total += o;
      if (total >= cutoff) continue;
      const double amp = std::sqrt(hbar * (occ[n] + 1));
      occ[n] += 1;
      up.emplace_back(basis.index_of(occ), s, Complex(amp, 0.0));
    }
    SparseXcd a(basis.size(), basis.size());
    a.setFromTriplets(up.begin(), up.end());
    sys.creators.push_back(a);
    sys.annihilators.push_back(a.adjoint());
  }
  return sys;
}

QuantifiedSystem quantify_fermionic(int dim_v, double hbar) {
  if (dim_v > 12)
    throw std::invalid_argument("quantify: fermionic dim_v capped at 12");
  const long dim = 1L << dim_v;
  // Jordan-Wigner: a_m = Z^(m) (x) raise (x) 1^(dim_v-m-1).
  SparseXcd raise(2, 2), z(2, 2), id(2, 2);
  raise.insert(1, 0) = std::sqrt(hbar);
  z.insert(0, 0) = 1.0;
  z.insert(1, 1) = -1.0;
  id.insert(0, 0) = 1.0;
  id.insert(1, 1) = 1.0;

  QuantifiedSystem sys;
  sys.sigma = Sigma::Minus;
  sys.dim_v = dim_v;
  sys.cutoff = dim_v;
  sys.hbar = hbar;
  sys.space_dim = dim;
  sys.vacuum = VectorXcd::Zero(dim);
  sys.vacuum[0] = 1.0;
  sys.degree = Eigen::VectorXd::Zero(dim);
  for (long s = 0; s < dim; ++s) {
    int bits = 0;
    for (long b = s; b != 0; b >>= 1) bits += static_cast<int>(b & 1);
    sys.degree[s] = bits;
  }
  for (int m = 0; m < dim_v; ++m) {
    SparseXcd a(1, 1);
    a.insert(0, 0) = 1.0;
    for (int site = 0; site < dim_v; ++site) {
      const SparseXcd& factor = (site < m) ? z : (site == m) ? raise : id;
      a = Eigen::kroneckerProduct(a, factor).eval();
    }
    sys.creators.push_back(a);
    sys.annihilators.push_back(a.adjoint());
  }
  return sys;
}

QuantifiedSystem quantify_maxwellonic(int dim_v, int cutoff, double hbar) {
  long dim = 0, block = 1;
  for (int len = 0; len <= cutoff; ++len) {
    dim += block;
    block *= dim_v;
    if (dim > 200000)
      throw std::invalid_argument("quantify: tensor-algebra dimension overflow");
  }
  // Words ordered by length, then lexicographically.
  std::vector<std::vector<int>> words{{}};
  std::map<std::vector<int>, long> index;
  index[{}] = 0;
  std::vector<std::vector<int>> prev{{}};
  for (int len = 1; len <= cutoff; ++len) {
    std::vector<std::vector<int>> next;
    for (int letter = 0; letter < dim_v; ++letter)
      for (const auto& w : prev) {
        std::vector<int> nw{letter};
        nw.insert(nw.end(), w.begin(), w.end());
        next.push_back(std::move(nw));
      }
    for (auto& w : next) {
      index[w] = static_cast<long>(words.size());
      words.push_back(w);
    }
    prev = std::move(next);
  }

  QuantifiedSystem sys;
  sys.sigma = Sigma::Zero;
  sys.dim_v = dim_v;
  sys.cutoff = cutoff;
  sys.hbar = hbar;
  sys.space_dim = static_cast<long>(words.size());
  sys.vacuum = VectorXcd::Zero(sys.space_dim);
  sys.vacuum[0] = 1.0;
  sys.degree = Eigen::VectorXd::Zero(sys.space_dim);
  for (long s = 0; s < sys.space_dim; ++s)
    sys.degree[s] = static_cast<double>(words[s].size());
  const double amp = std::sqrt(hbar);
  for (int n = 0; n < dim_v; ++n) {
    std::vector<Triplet> up;
    for (long s = 0; s < sys.space_dim; ++s) {
      if (static_cast<int>(words[s].size()) >= cutoff) continue;
      std::vector<int> nw;
      nw.push_back(n);
      nw.insert(nw.end(), words[s].begin(), words[s].end());
      up.emplace_back(index.at(nw), s, Complex(amp, 0.0));
    }
    SparseXcd a(sys.space_dim, sys.space_dim);
    a.setFromTriplets(up.begin(), up.end());
    sys.creators.push_back(a);
    sys.annihilators.push_back(a.adjoint());
  }
  return sys;
}

}  // namespace

QuantifiedSystem quantify(Sigma sigma, int dim_v, int cutoff, double hbar) {
  if (dim_v < 1) throw std::invalid_argument("quantify: dim_v >= 1");
  if (sigma != Sigma::Minus && cutoff < 1)
    throw std::invalid_argument("quantify: cutoff >= 1");
  switch (sigma) {
    case Sigma::Plus: return quantify_bosonic(dim_v, cutoff, hbar);
    case Sigma::Minus: return quantify_fermionic(dim_v, hbar);
    default: return quantify_maxwellonic(dim_v, cutoff, hbar);
  }
}

BosonOperators simplified_boson(int modes, const QuantumConstants& qc,
                                int rep_power) {
  if (modes < 1) throw std::invalid_argument("simplified_boson: modes >= 1");
  qc.validate();
  const int N = modes;
  Eigen::VectorXd eta = Eigen::VectorXd::Ones(N + 2);
  std::vector<std::string> labels;
  for (int n = 1; n <= N; ++n) labels.push_back(std::to_string(n));
  labels.push_back("X'");
  labels.push_back("Y'");

  BosonOperators ops;
  ops.rep = defining_rep(eta, labels);
  if (rep_power > 1) ops.rep = sym_power_rep(ops.rep, rep_power);
  ops.qc = qc;

  std::map<std::pair<int, int>, int> gen;
  for (size_t g = 0; g < ops.rep.plane->size(); ++g)
    gen[(*ops.rep.plane)[g]] = static_cast<int>(g);
  const auto mat = [&](int a, int b) -> const MatrixXcd& {
    return ops.rep.matrices[gen.at({a, b})];
  };
  const int Xp = N, Yp = N + 1;
  for (int n = 0; n < N; ++n) ops.q.push_back(qc.delta_q * mat(n, Xp));
  for (int n = 0; n < N; ++n) ops.p.push_back(-qc.delta_p * mat(n, Yp));
  ops.l_xpyp = mat(Xp, Yp);
  ops.i_op = -qc.delta_r * ops.l_xpyp;  // L_{Y'X'}
  for (int m = 0; m < N; ++m)
    for (int n = m + 1; n < N; ++n) ops.l_rot.push_back(mat(m, n));
  return ops;
}

std::vector<VectorXcd> cyclic_subspace(const std::vector<MatrixXcd>& generators,
                                       const VectorXcd& vacuum,
                                       int max_degree) {
  const double norm0 = vacuum.norm();
  if (std::abs(norm0 - 1.0) > 1e-10)
    throw std::invalid_argument("cyclic_subspace: vacuum must be unit norm");
  std::vector<VectorXcd> basis{vacuum / norm0};
  std::vector<VectorXcd> frontier = basis;
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<VectorXcd> next;
    for (const auto& v : frontier)
      for (const auto& g : generators) {
        VectorXcd w = g * v;
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& b : basis) w -= b.dot(w) * b;
        const double n = w.norm();
        if (n > 1e-10) {
          w /= n;
          basis.push_back(w);
          next.push_back(w);
        }
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return basis;
}

Complex green_function(const QuantifiedSystem& sys,
                       const std::vector<int>& indices) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  VectorXcd v = sys.vacuum;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    const int i = *it;
    if (i < 0 || i >= sys.dim_v)
      throw std::invalid_argument("green_function: mode index out of range");
    v = inv_sqrt2 * (sys.creators[i] * v + sys.annihilators[i] * v);
  }
  return sys.vacuum.dot(v);
}

double relation_defect(const QuantifiedSystem& sys) {
  const long dim = sys.space_dim;
  // Projector onto states strictly below the truncation boundary.
  Eigen::VectorXcd pdiag(dim);
  for (long s = 0; s < dim; ++s)
    pdiag[s] = (sys.sigma == Sigma::Minus || sys.degree[s] <= sys.cutoff - 1)
                   ? 1.0
                   : 0.0;
  const auto proj = pdiag.asDiagonal();

  const double sigma = (sys.sigma == Sigma::Plus)    ? 1.0
                       : (sys.sigma == Sigma::Minus) ? -1.0
                                                     : 0.0;
  double worst = 0.0;
  const auto norm = [](const SparseXcd& m) {
    double w = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
      for (SparseXcd::InnerIterator it(m, k); it; ++it)
        w = std::max(w, std::abs(it.value()));
    return w;
  };
  SparseXcd id(dim, dim);
  id.setIdentity();
  for (int m = 0; m < sys.dim_v; ++m)
    for (int n = 0; n < sys.dim_v; ++n) {
      SparseXcd rel = sys.annihilators[n] * sys.creators[m] -
                      sigma * SparseXcd(sys.creators[m] * sys.annihilators[n]);
      if (m == n) rel = rel - SparseXcd(sys.hbar * id);
      worst = std::max(worst, norm(SparseXcd(rel * proj)));
      if (sys.sigma == Sigma::Minus) {
        // a a + a a and c c + c c vanish as well.
        worst = std::max(
            worst, norm(SparseXcd(sys.creators[m] * sys.creators[n] +
                                  sys.creators[n] * sys.creators[m])));
      }
    }
  return worst;
}

SparseXcd quantified_action(const QuantifiedSystem& sys, const MatrixXcd& a1) {
  if (a1.rows() != sys.dim_v || a1.cols() != sys.dim_v)
    throw std::invalid_argument("quantified_action: A1 must be dim_v x dim_v");
  SparseXcd out(sys.space_dim, sys.space_dim);
  for (int m = 0; m < sys.dim_v; ++m)
    for (int n = 0; n < sys.dim_v; ++n)
      if (a1(m, n) != Complex(0.0))
        out += (a1(m, n) / sys.hbar) *
               SparseXcd(sys.creators[m] * sys.annihilators[n]);
  return out;
}

}  // namespace liekit
