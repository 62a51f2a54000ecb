#ifndef RELAX_GAMMA_HPP
#define RELAX_GAMMA_HPP

namespace relax {

/// Gamma(x) for real x, poles at non-positive integers (throws DomainError).
/// Lanczos approximation, relative accuracy ~1e-15 on (0, 172); reflection
/// formula for negative non-integer arguments.
double gamma_fn(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// 1/Gamma(x) for all real x; returns 0 at non-positive integers.
double rgamma(double x);

/// sin(pi*x) with exact argument reduction (accurate near integer x).
double sin_pi(double x);

struct LogRgamma {
    double log_abs;  // log |1/Gamma(x)|; -inf at poles of Gamma reciprocal zeros
    double sign;     // -1, 0, +1
};

/// log-magnitude and sign of 1/Gamma(x); sign 0 when 1/Gamma(x) == 0.
LogRgamma rgamma_log(double x);

}  // namespace relax

#endif
