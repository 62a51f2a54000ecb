#ifndef RELAX_KILBAS_SAIGO_HPP
#define RELAX_KILBAS_SAIGO_HPP

#include "relax/mittag_leffler.hpp"

namespace relax {

/// Parameters of the Kilbas-Saigo function E_{alpha,m,l}(z) = sum_n c_n z^n,
/// c_0 = 1, c_n = prod_{i=0}^{n-1} Gamma(alpha(i m + l) + 1) / Gamma(alpha(i m + l + 1) + 1).
struct KsArgs {
    double alpha = 1.0;
    double m = 1.0;
    double l = 0.0;

    void validate() const;  // throws InvalidOrder / PoleInCoefficient
};

double kilbas_saigo(const KsArgs& args, double z, const EvalOptions& opts = {});

}  // namespace relax

#endif
