#ifndef RELAX_ERRORS_HPP
#define RELAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relax {

/// A series or iteration hit its term/iteration cap before meeting tolerance.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// An order parameter violates its positivity constraint.
struct InvalidOrder : std::invalid_argument {
    explicit InvalidOrder(const std::string& what) : std::invalid_argument(what) {}
};

/// A Kilbas-Saigo coefficient ratio hits a Gamma pole.
struct PoleInCoefficient : std::domain_error {
    explicit PoleInCoefficient(const std::string& what) : std::domain_error(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Laplace-domain evaluation at a pole of the transform.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Two-resolution Talbot estimates disagree beyond the configured budget.
struct AccuracyLoss : std::runtime_error {
    explicit AccuracyLoss(const std::string& what) : std::runtime_error(what) {}
};

/// Declared endpoint exponent makes the integrand non-integrable.
struct NonIntegrable : std::domain_error {
    explicit NonIntegrable(const std::string& what) : std::domain_error(what) {}
};

struct ToleranceNotMet : std::runtime_error {
    explicit ToleranceNotMet(const std::string& what) : std::runtime_error(what) {}
};

struct SingularKernel : std::runtime_error {
    explicit SingularKernel(const std::string& what) : std::runtime_error(what) {}
};

/// The implicit step equation of the Volterra solver lost its diagonal.
struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooCoarse : std::invalid_argument {
    explicit GridTooCoarse(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input data file; carries the 1-based offending line.
struct CsvError : std::runtime_error {
    int line;
    CsvError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

}  // namespace relax

#endif
