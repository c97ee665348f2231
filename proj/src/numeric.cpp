#include "numeric.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace numeric {

namespace {

// Interval enclosure of cos(2*pi*e/N) or sin(2*pi*e/N).  The angle is first
// enclosed with directed rounding; since |cos' | = |sin| <= 1 the function
// value moves by at most the angle-interval width, which is added to both
// sides along with one ulp for the cos/sin rounding itself.
void trig_enclose(mpfr_t lo, mpfr_t hi, std::int64_t e, std::int64_t N,
                  bool want_sin, mpfr_prec_t prec) {
  mpfr_t al, ah, w, f;
  mpfr_inits2(prec, al, ah, w, f, (mpfr_ptr)nullptr);
  mpfr_const_pi(al, MPFR_RNDD);
  mpfr_mul_si(al, al, 2 * e, MPFR_RNDD);
  mpfr_div_si(al, al, N, MPFR_RNDD);
  mpfr_const_pi(ah, MPFR_RNDU);
  mpfr_mul_si(ah, ah, 2 * e, MPFR_RNDU);
  mpfr_div_si(ah, ah, N, MPFR_RNDU);
  mpfr_sub(w, ah, al, MPFR_RNDU);  // angle interval width
  if (want_sin)
    mpfr_sin(f, al, MPFR_RNDD);
  else
    mpfr_cos(f, al, MPFR_RNDD);
  mpfr_sub(lo, f, w, MPFR_RNDD);
  mpfr_nextbelow(lo);
  if (want_sin)
    mpfr_sin(f, al, MPFR_RNDU);
  else
    mpfr_cos(f, al, MPFR_RNDU);
  mpfr_add(hi, f, w, MPFR_RNDU);
  mpfr_nextabove(hi);
  mpfr_clears(al, ah, w, f, (mpfr_ptr)nullptr);
}

// running sum += c * [lo, hi]; mpfr_mul_q multiplies by the exact rational,
// so directed rounding stays rigorous for either sign of c
void accumulate(mpfr_t sum_lo, mpfr_t sum_hi, const cyc::Rat& c, mpfr_t lo,
                mpfr_t hi, mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  bool cpos = c > 0;
  mpfr_mul_q(t, cpos ? lo : hi, c.get_mpq_t(), MPFR_RNDD);
  mpfr_add(sum_lo, sum_lo, t, MPFR_RNDD);
  mpfr_mul_q(t, cpos ? hi : lo, c.get_mpq_t(), MPFR_RNDU);
  mpfr_add(sum_hi, sum_hi, t, MPFR_RNDU);
  mpfr_clear(t);
}

struct Box {
  mpfr_t rl, rh, il, ih;
  explicit Box(mpfr_prec_t prec) { mpfr_inits2(prec, rl, rh, il, ih, (mpfr_ptr)nullptr); }
  ~Box() { mpfr_clears(rl, rh, il, ih, (mpfr_ptr)nullptr); }
  Box(const Box&) = delete;
  Box& operator=(const Box&) = delete;
};

void enclose(Box& b, const cyc::Cyc& z, mpfr_prec_t prec) {
  mpfr_set_zero(b.rl, 0);
  mpfr_set_zero(b.rh, 0);
  mpfr_set_zero(b.il, 0);
  mpfr_set_zero(b.ih, 0);
  std::int64_t N = z.modulus();
  const auto& c = z.coeffs();
  mpfr_t lo, hi;
  mpfr_inits2(prec, lo, hi, (mpfr_ptr)nullptr);
  for (std::int64_t i = 0; i < (std::int64_t)c.size(); ++i) {
    if (c[i] == 0) continue;
    trig_enclose(lo, hi, i, N, false, prec);
    accumulate(b.rl, b.rh, c[i], lo, hi, prec);
    trig_enclose(lo, hi, i, N, true, prec);
    accumulate(b.il, b.ih, c[i], lo, hi, prec);
  }
  mpfr_clears(lo, hi, (mpfr_ptr)nullptr);
}

std::string print_mid(mpfr_t lo, mpfr_t hi, int digits, mpfr_prec_t prec) {
  mpfr_t mid;
  mpfr_init2(mid, prec);
  mpfr_add(mid, lo, hi, MPFR_RNDN);
  mpfr_div_si(mid, mid, 2, MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", digits, mid);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(mid);
  return out;
}

bool width_below(mpfr_t lo, mpfr_t hi, int digits, mpfr_prec_t prec) {
  mpfr_t w, eps;
  mpfr_inits2(prec, w, eps, (mpfr_ptr)nullptr);
  mpfr_sub(w, hi, lo, MPFR_RNDU);
  mpfr_set_si(eps, 10, MPFR_RNDN);
  mpfr_pow_si(eps, eps, -digits, MPFR_RNDD);
  bool ok = mpfr_cmp(w, eps) < 0;
  mpfr_clears(w, eps, (mpfr_ptr)nullptr);
  return ok;
}

}  // namespace

ComplexBox embed(const cyc::Cyc& z, int digits) {
  if (digits < 1) digits = 1;
  mpfr_prec_t prec = 64 + (mpfr_prec_t)(digits * 4) + (mpfr_prec_t)z.coeffs().size();
  for (int attempt = 0; attempt < 20; ++attempt, prec *= 2) {
    Box b(prec);
    enclose(b, z, prec);
    if (width_below(b.rl, b.rh, digits, prec) && width_below(b.il, b.ih, digits, prec)) {
      ComplexBox out;
      out.re_lo = mpfr_get_d(b.rl, MPFR_RNDD);
      out.re_hi = mpfr_get_d(b.rh, MPFR_RNDU);
      out.im_lo = mpfr_get_d(b.il, MPFR_RNDD);
      out.im_hi = mpfr_get_d(b.ih, MPFR_RNDU);
      out.re_str = print_mid(b.rl, b.rh, digits, prec);
      out.im_str = print_mid(b.il, b.ih, digits, prec);
      return out;
    }
  }
  throw std::runtime_error("interval refinement failed to converge");
}

int certified_sign(const cyc::Cyc& z) {
  if (z.conj() != z) throw std::invalid_argument("value is not real");
  if (z.is_zero()) throw std::invalid_argument("value is zero");
  mpfr_prec_t prec = 96;
  for (int attempt = 0; attempt < 24; ++attempt, prec *= 2) {
    Box b(prec);
    enclose(b, z, prec);
    if (mpfr_sgn(b.rl) > 0) return 1;
    if (mpfr_sgn(b.rh) < 0) return -1;
  }
  throw std::runtime_error("sign certification failed to converge");
}

namespace {

// certified order of two exactly distinct real values
bool real_less(const cyc::Cyc& a, const cyc::Cyc& b) {
  return certified_sign(b - a) > 0;
}

}  // namespace

bool tiebreak_before(const cyc::Cyc& a, const cyc::Cyc& b) {
  if (a == b) throw std::invalid_argument("tiebreak on equal values");
  cyc::Rat half(1, 2);
  cyc::Cyc re_a = half * (a + a.conj()), re_b = half * (b + b.conj());
  if (re_a != re_b) return real_less(re_b, re_a);  // larger real part first
  // purely imaginary difference: compare Im via -i*(z - conj(z))/2
  cyc::Cyc i = cyc::Cyc::root_of_unity(4, 1);
  cyc::Cyc im_a = half * (-i) * (a - a.conj()), im_b = half * (-i) * (b - b.conj());
  return real_less(im_b, im_a);  // larger imaginary part first
}

}  // namespace numeric
