#include "liekit/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace liekit {

OscillatorOperators simplified_oscillator(const QuantumConstants& qc) {
  if (!qc.two_l)
    throw std::invalid_argument("simplified_oscillator: two_l not set");
  qc.validate();
  const int two_l = *qc.two_l;
  const double l = 0.5 * two_l;

  OscillatorOperators ops;
  ops.rep = so3_irrep(two_l);
  ops.qc = qc;
  const Complex iu(0.0, 1.0);
  // so3_irrep stores the anti-Hermitian -i*J_a; recover the Hermitian J_a.
  const MatrixXcd jx = iu * ops.rep.matrices[0];
  const MatrixXcd jy = iu * ops.rep.matrices[1];
  const MatrixXcd jz = iu * ops.rep.matrices[2];
  ops.q = qc.delta_q * jx;
  ops.p = qc.delta_p * jy;
  ops.r = qc.delta_r * (iu * jz);  // anti-Hermitian: [q, p] = (dq dp/dr) r
  ops.i_op = (two_l == 0) ? MatrixXcd::Zero(1, 1).eval()
                          : MatrixXcd((1.0 / (l * qc.delta_r)) * ops.r);
  return ops;
}

CanonicalOperators canonical_truncated(int levels, double hbar) {
  if (levels < 1)
    throw std::invalid_argument("canonical_truncated: levels >= 1");
  MatrixXcd a = MatrixXcd::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(n * hbar);
  const MatrixXcd adag = a.adjoint();
  CanonicalOperators ops;
  ops.hbar = hbar;
  ops.q = (a + adag) / std::sqrt(2.0);
  ops.p = Complex(0.0, 1.0) * (adag - a) / std::sqrt(2.0);
  return ops;
}

CorrespondenceRow correspondence_row(int two_l, int k, double hbar) {
  if (two_l < 2 || k < 1 || 4 * k > two_l)
    throw std::invalid_argument("correspondence_row: need 1 <= k <= two_l/4");
  const double l = 0.5 * two_l;
  QuantumConstants qc;
  qc.hbar = hbar;
  qc.delta_q = qc.delta_p = std::sqrt(hbar / l);
  qc.delta_r = 1.0;
  qc.two_l = two_l;
  const OscillatorOperators fin = simplified_oscillator(qc);
  const CanonicalOperators can = canonical_truncated(k, hbar);

  CorrespondenceRow row;
  row.two_l = two_l;
  row.k = k;
  row.delta_q = qc.delta_q;
  row.delta_p = qc.delta_p;
  row.err_q = (fin.q.topLeftCorner(k, k) - can.q).cwiseAbs().maxCoeff();
  row.err_p = (fin.p.topLeftCorner(k, k) - can.p).cwiseAbs().maxCoeff();
  const SpectrumReport sp = spectrum(fin.q, false);
  row.spacing = sp.spacing;
  row.min = sp.min;
  row.max = sp.max;
  return row;
}

std::vector<CorrespondenceRow> correspondence_table(
    const std::vector<int>& two_l_list, int k, double hbar) {
  std::vector<CorrespondenceRow> rows;
  for (int two_l : two_l_list)
    rows.push_back(correspondence_row(two_l, k, hbar));
  return rows;
}

}  // namespace liekit
