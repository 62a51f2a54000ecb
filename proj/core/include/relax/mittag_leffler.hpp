#ifndef RELAX_MITTAG_LEFFLER_HPP
#define RELAX_MITTAG_LEFFLER_HPP

#include <complex>

namespace relax {

struct EvalOptions {
    double rel_tol = 1e-12;
    int max_terms = 10000;
};

/// Orders (a, b, c) of the three-parameter Mittag-Leffler function
/// E^c_{a,b}(x) = sum_k (c)_k x^k / (Gamma(a k + b) k!).
/// c = 1 reduces to E_{a,b}, b = c = 1 to E_a.
struct MlArgs {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;

    void validate() const;  // throws InvalidOrder unless a, b, c > 0
};

double ml1(double a, double x, const EvalOptions& opts = {});
double ml2(double a, double b, double x, const EvalOptions& opts = {});
double ml3(const MlArgs& args, double x, const EvalOptions& opts = {});

std::complex<double> ml1(double a, std::complex<double> z, const EvalOptions& opts = {});
std::complex<double> ml2(double a, double b, std::complex<double> z, const EvalOptions& opts = {});
std::complex<double> ml3(const MlArgs& args, std::complex<double> z, const EvalOptions& opts = {});

namespace detail {

// exp(ln_scale) * E^c_{a,b}(-x) for x >= 0. The scale is folded into the
// series term-by-term so that externally balanced combinations like
// w^{ac} E^c_{a,b}(-w^a) never overflow on the way through.
double ml_neg_scaled(double a, double b, double c, double x, double ln_scale,
                     const EvalOptions& opts);

// exp(ln_scale) * E^c_{a,b}(+x) for x >= 0 (all series terms positive for
// c > 0, so only the folded scale keeps magnitudes representable).
double ml_pos_scaled(double a, double b, double c, double x, double ln_scale,
                     const EvalOptions& opts);

}  // namespace detail

}  // namespace relax

#endif
