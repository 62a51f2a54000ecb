#include "relax/dd.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace relax {

using ddops::quick_two_sum;
using ddops::two_prod;
using ddops::two_sum;

dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(dd(q1), b));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(dd(q2), b));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, dd(q3));
}

dd dd_abs(dd a) { return a.hi < 0.0 ? dd_neg(a) : a; }

bool dd_less(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }

namespace {

const dd kLn2{0.6931471805599453, 2.3190468138462996e-17};
const dd kLnTwoPiHalf{0.9189385332046728, -3.8782941580672414e-17};  // ln(2*pi)/2

}  // namespace

dd dd_exp(dd a) {
    // exp(k*ln2 + r) = 2^k * exp(r), |r| <= ln2/2; Taylor on r.
    if (a.hi > 709.0) return dd(std::numeric_limits<double>::infinity());
    if (a.hi < -745.0) return dd(0.0);
    double k = std::round(a.hi / kLn2.hi);
    dd r = dd_sub(a, dd_mul(dd(k), kLn2));
    dd sum = dd_add(dd(1.0), r);
    dd term = r;
    for (int i = 2; i <= 20; ++i) {
        term = dd_mul(term, r);
        term = dd_div(term, dd(static_cast<double>(i)));
        sum = dd_add(sum, term);
        if (std::abs(term.hi) < 1e-35 * std::abs(sum.hi)) break;
    }
    double scale = std::ldexp(1.0, static_cast<int>(k));
    return {sum.hi * scale, sum.lo * scale};
}

dd dd_log(dd a) {
    // Newton on exp: x1 = x0 + a*exp(-x0) - 1 doubles the correct digits.
    double x0 = std::log(a.hi);
    dd x{x0};
    for (int i = 0; i < 2; ++i) {
        dd e = dd_exp(dd_neg(x));
        dd corr = dd_sub(dd_mul(a, e), dd(1.0));
        x = dd_add(x, corr);
    }
    return x;
}

dd dd_log_gamma(dd x) {
    // Shift x above 32, then Stirling with even Bernoulli coefficients:
    // lnG(x) = (x-1/2)ln x - x + ln(2pi)/2 + sum_n B_{2n}/(2n(2n-1) x^{2n-1}).
    static const std::array<dd, 13> coef = {
        dd(0.08333333333333333, 4.625929269271485e-18),
        dd(-0.002777777777777778, 1.0601087908747154e-19),
        dd(0.0007936507936507937, 6.883823317368282e-22),
        dd(-0.0005952380952380953, 5.36938218754726e-20),
        dd(0.0008417508417508417, 3.6870174889237694e-20),
        dd(-0.0019175269175269176, 1.0675702776872475e-19),
        dd(0.00641025641025641, 2.2240044563805217e-19),
        dd(-0.029550653594771242, 4.861760957508855e-19),
        dd(0.17964437236883057, -6.401600482710946e-19),
        dd(-1.3924322169059011, 1.5837056989230303e-17),
        dd(13.402864044168393, -6.154114101993966e-16),
        dd(-156.84828462600203, 9.391823141715389e-15),
        dd(2193.1033333333335, -1.3339255626002948e-13)};

    dd shift_log{0.0};
    while (x.hi < 32.0) {
        shift_log = dd_add(shift_log, dd_log(x));
        x = dd_add(x, dd(1.0));
    }

    dd inv = dd_div(dd(1.0), x);
    dd inv2 = dd_mul(inv, inv);
    dd series{0.0};
    dd p = inv;
    for (const dd& c : coef) {
        series = dd_add(series, dd_mul(c, p));
        p = dd_mul(p, inv2);
        if (std::abs(p.hi * 40.0) < 1e-34 * std::abs(series.hi)) break;
    }

    dd lx = dd_log(x);
    dd res = dd_mul(dd_sub(x, dd(0.5)), lx);
    res = dd_sub(res, x);
    res = dd_add(res, kLnTwoPiHalf);
    res = dd_add(res, series);
    return dd_sub(res, shift_log);
}

}  // namespace relax
