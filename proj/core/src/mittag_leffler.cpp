#include "relax/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relax/dd.hpp"
#include "relax/errors.hpp"
#include "relax/gamma.hpp"

namespace relax {

namespace {

// Taylor is used for series arguments |x| below 32^a; beyond that the
// alternating sum cancels more than double-double accumulation can absorb
// and the algebraic large-argument expansion has already converged past
// 1e-13. Both zones were calibrated against a 256-bit reference.
double taylor_radius(double a) { return std::pow(32.0, a); }

struct TaylorResult {
    double value;
    double est_rel_err;
    bool converged;
};

// Plain-double Taylor pass for exp(ln_scale)*E^c_{a,b}(sgn*x), sgn = +-1.
// Tracks the largest partial term so the caller can detect cancellation.
TaylorResult taylor_double(double a, double b, double c, double x, double sgn,
                           double ln_scale, const EvalOptions& opts) {
    double term = std::exp(ln_scale - log_gamma(b));
    double sum = term;
    double comp = 0.0;  // Kahan correction
    double tmax = std::abs(term);
    double lg_prev = log_gamma(b);
    int quiet = 0;
    for (int m = 0; m + 1 < opts.max_terms; ++m) {
        double lg_next = log_gamma(a * (m + 1) + b);
        term *= sgn * x * ((c + m) / (m + 1.0)) * std::exp(lg_prev - lg_next);
        lg_prev = lg_next;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        tmax = std::max(tmax, std::abs(term));
        if (std::abs(term) <= 0.1 * opts.rel_tol * std::abs(sum)) {
            if (++quiet >= 3) {
                double est = 1.1e-16 * tmax / std::max(std::abs(sum), 1e-300);
                return {sum, est, true};
            }
        } else {
            quiet = 0;
        }
    }
    return {sum, 1.0, false};
}

// Double-double Taylor pass; rescues the cancellation band where the plain
// pass loses more digits than rel_tol allows.
TaylorResult taylor_dd(double a, double b, double c, double x, double sgn,
                       double ln_scale, const EvalOptions& opts) {
    dd lg_prev = dd_log_gamma(dd(b));
    dd term = dd_exp(dd_sub(dd(ln_scale), lg_prev));
    dd sum = term;
    double tmax = std::abs(term.hi);
    int quiet = 0;
    int terms_used = 1;
    for (int m = 0; m + 1 < opts.max_terms; ++m, ++terms_used) {
        dd arg = dd_add(ddops::two_prod(a, static_cast<double>(m + 1)), dd(b));
        dd lg_next = dd_log_gamma(arg);
        dd ratio = dd_exp(dd_sub(lg_prev, lg_next));
        lg_prev = lg_next;
        term = dd_mul(term, dd(sgn * x));
        term = dd_mul(term, dd_div(dd_add(dd(c), dd(static_cast<double>(m))),
                                   dd(static_cast<double>(m + 1))));
        term = dd_mul(term, ratio);
        sum = dd_add(sum, term);
        tmax = std::max(tmax, std::abs(term.hi));
        if (std::abs(term.hi) <= 0.01 * opts.rel_tol * std::abs(sum.hi)) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    if (quiet < 3) return {static_cast<double>(sum), 1.0, false};
    double est = 1e-31 * terms_used * tmax / std::max(std::abs(sum.hi), 1e-300);
    return {static_cast<double>(sum), est, true};
}

struct AsymResult {
    double value;
    double est_rel_err;
    bool usable;
};

// Algebraic large-argument expansion on the negative real axis:
//   E^c_{a,b}(-x) ~ sum_j (-1)^j (c)_j/j! x^{-c-j} / Gamma(b - a(c+j)),
// truncated at the minimum of the term envelope (|sin| bound of the
// reflected Gamma). Valid for 0 < a < 1; exponentially small contributions
// are absent on this ray. All magnitudes run in log space.
AsymResult asym_neg(double a, double b, double c, double x, double ln_scale,
                    const EvalOptions& opts) {
    const double ln_x = std::log(x);
    const double ln_pi = std::log(M_PI);
    double lnpoch = 0.0, lnfact = 0.0;
    double sum = 0.0, comp = 0.0;
    double env_min = std::numeric_limits<double>::infinity();
    double sum_at_min = 0.0;
    int rising = 0;
    int j_cap = std::min(opts.max_terms, 2000);
    for (int j = 0; j < j_cap; ++j) {
        double arg = b - a * (c + j);
        double base = ln_scale + lnpoch - lnfact - (c + j) * ln_x;
        double env_log = base + (arg >= 0.5 ? -log_gamma(arg)
                                            : log_gamma(1.0 - arg) - ln_pi);
        double env = std::exp(env_log);
        LogRgamma rg = rgamma_log(arg);
        if (rg.sign != 0.0) {
            double term = rg.sign * ((j % 2) ? -1.0 : 1.0) * std::exp(base + rg.log_abs);
            double y = term - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        if (env < env_min) {
            env_min = env;
            sum_at_min = sum;
            rising = 0;
        } else if (arg < 0.0 && ++rising > 4) {
            break;  // envelope past its minimum; further terms diverge
        }
        if (env <= 0.05 * opts.rel_tol * std::abs(sum) && j > 1) {
            return {sum, env / std::max(std::abs(sum), 1e-300), true};
        }
        lnpoch += std::log(c + j);
        lnfact += std::log(j + 1.0);
    }
    double est = env_min / std::max(std::abs(sum_at_min), 1e-300);
    return {sum_at_min, est, est < 1.0};
}

// Kummer path for a == 1: E^c_{1,b}(-w) = e^{-w} M(b-c, b, w) / Gamma(b),
// an all-positive series once b > c (mild finite sign changes otherwise).
double kummer_neg(double b, double c, double w, double ln_scale,
                  const EvalOptions& opts) {
    double ap = b - c;
    if (ap <= 0.0 && ap == std::floor(ap)) {
        // polynomial: M(-n, b, w) has n+1 terms, exact at any w
        int n = static_cast<int>(-ap);
        double term = 1.0, sum = 1.0;
        for (int m = 0; m < n; ++m) {
            term *= (ap + m) * w / ((b + m) * (m + 1.0));
            sum += term;
        }
        return std::exp(ln_scale - w - log_gamma(b)) * sum;
    }
    if (w <= 600.0) {
        double term = 1.0, sum = 1.0;
        int quiet = 0;
        for (int m = 0; m + 1 < opts.max_terms; ++m) {
            term *= (ap + m) * w / ((b + m) * (m + 1.0));
            sum += term;
            if (std::abs(term) <= 0.1 * opts.rel_tol * std::abs(sum)) {
                if (++quiet >= 3) return std::exp(ln_scale - w - log_gamma(b)) * sum;
            } else {
                quiet = 0;
            }
        }
        throw NonConvergence("ml: Kummer series exceeded max_terms");
    }
    // w > 600: the confluent asymptotics reduce to the same algebraic
    // expansion used for a < 1; exponential residue < e^-600 is dropped.
    AsymResult ar = asym_neg(1.0, b, c, w, ln_scale, opts);
    if (!ar.usable) throw NonConvergence("ml: asymptotic expansion unusable at a=1");
    return ar.value;
}

}  // namespace

void MlArgs::validate() const {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw InvalidOrder("MlArgs: orders a, b, c must be positive");
}

namespace detail {

double ml_neg_scaled(double a, double b, double c, double x, double ln_scale,
                     const EvalOptions& opts) {
    if (x == 0.0) return std::exp(ln_scale - log_gamma(b));
    if (a == 1.0) return kummer_neg(b, c, x, ln_scale, opts);

    if (a < 1.0 && x >= taylor_radius(a)) {
        // smallest-term truncation; the floor near the switch radius sits at
        // ~1e-13 of the value, so only pathological requests land here unmet
        AsymResult ar = asym_neg(a, b, c, x, ln_scale, opts);
        if (ar.usable && ar.est_rel_err <= std::max(opts.rel_tol, 1e-10)) return ar.value;
        throw NonConvergence("ml: asymptotic expansion did not reach tolerance");
    }

    TaylorResult tr = taylor_double(a, b, c, x, -1.0, ln_scale, opts);
    if (!tr.converged) throw NonConvergence("ml: Taylor series exceeded max_terms");
    if (tr.est_rel_err <= opts.rel_tol) return tr.value;

    TaylorResult td = taylor_dd(a, b, c, x, -1.0, ln_scale, opts);
    if (!td.converged) throw NonConvergence("ml: Taylor series exceeded max_terms");
    if (td.est_rel_err <= std::max(opts.rel_tol, 1e-13)) return td.value;
    throw NonConvergence("ml: cancellation exceeds extended-precision budget");
}

double ml_pos_scaled(double a, double b, double c, double x, double ln_scale,
                     const EvalOptions& opts) {
    if (x == 0.0) return std::exp(ln_scale - log_gamma(b));
    TaylorResult tr = taylor_double(a, b, c, x, +1.0, ln_scale, opts);
    if (!tr.converged) throw NonConvergence("ml: Taylor series exceeded max_terms");
    if (!std::isfinite(tr.value))
        throw NonConvergence("ml: positive-argument series overflowed");
    return tr.value;
}

}  // namespace detail

double ml3(const MlArgs& args, double x, const EvalOptions& opts) {
    args.validate();
    if (x >= 0.0) return detail::ml_pos_scaled(args.a, args.b, args.c, x, 0.0, opts);
    return detail::ml_neg_scaled(args.a, args.b, args.c, -x, 0.0, opts);
}

double ml2(double a, double b, double x, const EvalOptions& opts) {
    return ml3({a, b, 1.0}, x, opts);
}

double ml1(double a, double x, const EvalOptions& opts) {
    return ml3({a, 1.0, 1.0}, x, opts);
}

namespace {

std::complex<double> taylor_complex(const MlArgs& args, std::complex<double> z,
                                    const EvalOptions& opts, double* cancel_ratio) {
    std::complex<double> term = rgamma(args.b);
    std::complex<double> sum = term;
    double tmax = std::abs(term);
    double lg_prev = log_gamma(args.b);
    int quiet = 0;
    for (int m = 0; m + 1 < opts.max_terms; ++m) {
        double lg_next = log_gamma(args.a * (m + 1) + args.b);
        term *= z * ((args.c + m) / (m + 1.0)) * std::exp(lg_prev - lg_next);
        lg_prev = lg_next;
        sum += term;
        tmax = std::max(tmax, std::abs(term));
        if (std::abs(term) <= 0.1 * opts.rel_tol * std::abs(sum)) {
            if (++quiet >= 3) {
                *cancel_ratio = tmax / std::max(std::abs(sum), 1e-300);
                return sum;
            }
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("ml: complex Taylor series exceeded max_terms");
}

// Complex algebraic expansion around the negative real axis; the sector
// guard keeps us away from the Stokes lines where exponential terms revive.
std::complex<double> asym_complex(const MlArgs& args, std::complex<double> z,
                                  const EvalOptions& opts) {
    std::complex<double> mz = -z;
    double sector = std::abs(std::arg(mz));
    if (args.a >= 1.0 || sector > 0.5 * M_PI * (1.0 - args.a))
        throw NonConvergence("ml: complex argument outside supported sector");
    std::complex<double> lmz = std::log(mz);
    double lnpoch = 0.0, lnfact = 0.0;
    std::complex<double> sum = 0.0;
    double env_min = std::numeric_limits<double>::infinity();
    std::complex<double> sum_at_min = 0.0;
    int rising = 0;
    for (int j = 0; j < std::min(opts.max_terms, 2000); ++j) {
        double arg = args.b - args.a * (args.c + j);
        double env_log = lnpoch - lnfact - (args.c + j) * lmz.real() +
                         (arg >= 0.5 ? -log_gamma(arg) : log_gamma(1.0 - arg) - std::log(M_PI));
        double env = std::exp(env_log);
        LogRgamma rg = rgamma_log(arg);
        if (rg.sign != 0.0) {
            std::complex<double> mag = std::exp(lnpoch - lnfact + rg.log_abs -
                                                (args.c + j) * lmz);
            sum += rg.sign * ((j % 2) ? -1.0 : 1.0) * mag;
        }
        if (env < env_min) {
            env_min = env;
            sum_at_min = sum;
            rising = 0;
        } else if (arg < 0.0 && ++rising > 4) {
            break;
        }
        if (env <= 0.05 * opts.rel_tol * std::abs(sum) && j > 1) return sum;
        lnpoch += std::log(args.c + j);
        lnfact += std::log(j + 1.0);
    }
    if (env_min <= 1e-11 * std::abs(sum_at_min)) return sum_at_min;
    throw NonConvergence("ml: complex asymptotic expansion did not converge");
}

}  // namespace

std::complex<double> ml3(const MlArgs& args, std::complex<double> z,
                         const EvalOptions& opts) {
    args.validate();
    if (z.imag() == 0.0) return {ml3(args, z.real(), opts), 0.0};
    if (std::abs(z) <= taylor_radius(args.a)) {
        double cancel = 0.0;
        std::complex<double> v = taylor_complex(args, z, opts, &cancel);
        if (cancel * 1.1e-16 <= opts.rel_tol) return v;
        return asym_complex(args, z, opts);  // throws if outside sector
    }
    if (z.real() < 0.0 && std::abs(z.imag()) <= 1e-13 * std::abs(z.real()))
        return {ml3(args, z.real(), opts), 0.0};
    return asym_complex(args, z, opts);
}

std::complex<double> ml2(double a, double b, std::complex<double> z,
                         const EvalOptions& opts) {
    return ml3({a, b, 1.0}, z, opts);
}

std::complex<double> ml1(double a, std::complex<double> z, const EvalOptions& opts) {
    return ml3({a, 1.0, 1.0}, z, opts);
}

}  // namespace relax
