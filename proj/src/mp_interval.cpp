#include "hypdim/mp_interval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hypdim {

MpInterval::MpInterval(mpfr_prec_t prec)
{
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

MpInterval::MpInterval(double v, mpfr_prec_t prec) : MpInterval(v, v, prec) {}

MpInterval::MpInterval(double lo, double hi, mpfr_prec_t prec) : MpInterval(prec)
{
    if (!(lo <= hi)) throw std::invalid_argument("MpInterval: lower endpoint exceeds upper endpoint");
    mpfr_set_d(lo_, lo, MPFR_RNDD);
    mpfr_set_d(hi_, hi, MPFR_RNDU);
}

MpInterval::MpInterval(const MpInterval& o) : MpInterval(o.precision())
{
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

MpInterval::MpInterval(MpInterval&& o) noexcept : MpInterval(o.precision())
{
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

MpInterval& MpInterval::operator=(const MpInterval& o)
{
    if (this != &o) {
        mpfr_set_prec(lo_, o.precision());
        mpfr_set_prec(hi_, o.precision());
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

MpInterval& MpInterval::operator=(MpInterval&& o) noexcept
{
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

MpInterval::~MpInterval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

int MpInterval::sign() const
{
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return 2;
}

bool MpInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool MpInterval::overlaps(const MpInterval& o) const
{
    return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
}

bool MpInterval::less(const MpInterval& o) const { return mpfr_less_p(hi_, o.lo_); }

double MpInterval::lo_down() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double MpInterval::hi_up() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double MpInterval::width_up() const
{
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

MpInterval operator+(const MpInterval& a, const MpInterval& b)
{
    MpInterval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

MpInterval operator*(const MpInterval& a, const MpInterval& b)
{
    const mpfr_prec_t p = std::max(a.precision(), b.precision());
    MpInterval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    // Endpoint products; the extremes give the enclosure.
    const mpfr_srcptr al[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bl[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : al)
        for (auto y : bl) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

MpInterval sqr(const MpInterval& a)
{
    MpInterval r(a.precision());
    if (mpfr_sgn(a.lo_) >= 0) {
        mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        if (mpfr_cmpabs(a.lo_, a.hi_) > 0)
            mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
        else
            mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    }
    return r;
}

MpInterval ldexp(const MpInterval& a, long e)
{
    MpInterval r(a.precision());
    mpfr_mul_2si(r.lo_, a.lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, a.hi_, e, MPFR_RNDU);
    return r;
}

std::ostream& operator<<(std::ostream& os, const MpInterval& a)
{
    return os << '[' << a.lo_down() << ", " << a.hi_up() << ']';
}

} // namespace hypdim
