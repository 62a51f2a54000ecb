#ifndef RELAX_DD_HPP
#define RELAX_DD_HPP

#include <cmath>

namespace relax {

// Double-double value: hi + lo with |lo| <= ulp(hi)/2, giving ~31 significant
// digits. Used by the Mittag-Leffler series in the cancellation band between
// the plain-double Taylor zone and the asymptotic zone. Algorithms follow the
// classic error-free transformations (Dekker/Knuth) and the QD library's
// exp/log constructions.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace ddops {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace ddops

dd dd_add(dd a, dd b);
dd dd_sub(dd a, dd b);
dd dd_mul(dd a, dd b);
dd dd_div(dd a, dd b);
dd dd_neg(dd a);
dd dd_abs(dd a);
bool dd_less(dd a, dd b);

dd dd_exp(dd a);
dd dd_log(dd a);

/// log(Gamma(x)) in double-double precision, x > 0.
dd dd_log_gamma(dd x);

}  // namespace relax

#endif
