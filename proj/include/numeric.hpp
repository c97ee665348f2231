#pragma once

// Certified numeric embedding of cyclotomic numbers under the convention
// zeta_N = e^{2*pi*i/N} (so zeta_4 = i and the Gauss sum comes out on the
// positive branch).  Values are enclosed in rectangles with MPFR endpoints
// computed under directed rounding, so every comparison made through this
// header is a proof, not an estimate.

#include <string>

#include "cyc.hpp"

namespace numeric {

struct ComplexBox {
  // [re_lo, re_hi] x [im_lo, im_hi], exact decimal-printable endpoints
  double re_lo, re_hi, im_lo, im_hi;  // clamped view for quick inspection
  std::string re_str, im_str;         // midpoints printed to the digit goal
};

// encloses z within 10^-digits on both axes
ComplexBox embed(const cyc::Cyc& z, int digits);

// certified sign of an exactly nonzero real cyclotomic value (+1 / -1);
// throws if z is not real or is zero
int certified_sign(const cyc::Cyc& z);

// deterministic tie-break order: larger real part first, then larger
// imaginary part.  Returns true when a should be labelled before b.
// Requires a != b (exact values); equal parts are detected exactly via
// conjugation, never numerically.
bool tiebreak_before(const cyc::Cyc& a, const cyc::Cyc& b);

}  // namespace numeric
