#ifndef LIEKIT_OSCILLATOR_HPP
#define LIEKIT_OSCILLATOR_HPP

#include "liekit/representation.hpp"

#include <vector>

namespace liekit {

/// Finite oscillator operators carried by a spin-l representation:
/// q = delta_q Jx, p = delta_p Jy, r = delta_r (i Jz), i_op = r/(l delta_r).
struct OscillatorOperators {
  Representation rep;
  QuantumConstants qc;
  MatrixXcd q;
  MatrixXcd p;
  MatrixXcd r;
  MatrixXcd i_op;
};

/// Truncated canonical ladder pair on a given number of levels, with
/// a|n> = sqrt(n hbar)|n-1>, q = (a + a^+)/sqrt(2), p = i(a^+ - a)/sqrt(2).
struct CanonicalOperators {
  MatrixXcd q;
  MatrixXcd p;
  double hbar;
};

struct CorrespondenceRow {
  int two_l;
  int k;
  double delta_q;
  double delta_p;
  double err_q;
  double err_p;
  double spacing;
  double min;
  double max;
};

/// Builds the finite oscillator from qc (two_l must be set and the constraint
/// l*delta_q*delta_p = hbar must hold); [q, p] = (delta_q delta_p/delta_r) r
/// holds exactly by construction.
OscillatorOperators simplified_oscillator(const QuantumConstants& qc);

CanonicalOperators canonical_truncated(int levels, double hbar);

/// Compares the top k x k corner of the finite oscillator (weight basis from
/// the extreme weight down, delta_q = delta_p = sqrt(hbar/l)) against the
/// truncated canonical pair; also reports the q spectrum statistics.
CorrespondenceRow correspondence_row(int two_l, int k, double hbar);

std::vector<CorrespondenceRow> correspondence_table(
    const std::vector<int>& two_l_list, int k, double hbar);

}  // namespace liekit

#endif
