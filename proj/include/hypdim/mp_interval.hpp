#pragma once

#include <iosfwd>

#include <mpfr.h>

namespace hypdim {

// Closed interval with MPFR endpoints at a fixed working precision. Lower
// endpoints round toward -inf, upper toward +inf.
class MpInterval {
public:
    explicit MpInterval(mpfr_prec_t prec = 53);
    MpInterval(double v, mpfr_prec_t prec);
    MpInterval(double lo, double hi, mpfr_prec_t prec);
    MpInterval(const MpInterval& o);
    MpInterval(MpInterval&& o) noexcept;
    MpInterval& operator=(const MpInterval& o);
    MpInterval& operator=(MpInterval&& o) noexcept;
    ~MpInterval();

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    // -1 / +1 when the sign is certain, 0 for the point interval [0, 0].
    // Returns 2 when the interval straddles or touches 0 otherwise.
    int sign() const;
    bool contains_zero() const;
    bool overlaps(const MpInterval& o) const;
    // Certainly below o.
    bool less(const MpInterval& o) const;

    double lo_down() const;
    double hi_up() const;
    double width_up() const;

    friend MpInterval operator+(const MpInterval& a, const MpInterval& b);
    friend MpInterval operator*(const MpInterval& a, const MpInterval& b);
    friend MpInterval sqr(const MpInterval& a);
    // a * 2^e (exact).
    friend MpInterval ldexp(const MpInterval& a, long e);

    friend std::ostream& operator<<(std::ostream& os, const MpInterval& a);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

} // namespace hypdim
