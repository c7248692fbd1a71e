#ifndef LOSMIX_DIST_CORE_HPP
#define LOSMIX_DIST_CORE_HPP

#include <cstdint>
#include <vector>

#include "losmix/rng.hpp"

namespace losmix {

// ---------------------------------------------------------------------------
// Continuous laws (recovery period / short stay)
// ---------------------------------------------------------------------------

enum class ContFamily : std::uint8_t { Normal, LogNormal };

/// Normal or log-normal law. For LogNormal, mu/sigma parameterize the log.
struct ContDistSpec {
    ContFamily family = ContFamily::Normal;
    double mu = 0.0;
    double sigma = 1.0;
};

ContDistSpec normal_spec(double mu, double sigma);
ContDistSpec lognormal_spec(double mu, double sigma);

void validate(const ContDistSpec& spec);

double cont_logpdf(const ContDistSpec& spec, double x);
double cont_pdf(const ContDistSpec& spec, double x);
double cont_cdf(const ContDistSpec& spec, double x);
double cont_mean(const ContDistSpec& spec);
double cont_sd(const ContDistSpec& spec);
double cont_sample(const ContDistSpec& spec, Rng& rng);

// ---------------------------------------------------------------------------
// Count laws (discharge lag)
// ---------------------------------------------------------------------------

enum class CountFamily : std::uint8_t { NegBin, Poisson, Cmp, Binomial, Multinomial };

/// One of five integer laws. Only the fields of the active family are
/// meaningful; use the factory functions below.
struct CountDistSpec {
    CountFamily family = CountFamily::Poisson;
    double r = 0.0;       // NegBin
    double p = 0.0;       // NegBin, Binomial
    double lambda = 0.0;  // Poisson, Cmp
    double nu = 0.0;      // Cmp
    long n = 0;           // Binomial
    std::vector<double> weights;  // Multinomial over {0, ..., K}
};

CountDistSpec negbin_spec(double r, double p);
CountDistSpec poisson_spec(double lambda);
CountDistSpec cmp_spec(double lambda, double nu);
CountDistSpec binomial_spec(long n, double p);
CountDistSpec multinomial_spec(std::vector<double> weights);

void validate(const CountDistSpec& spec);

/// log Z(lambda, nu) = log sum_j lambda^j / (j!)^nu, accumulated in log space.
/// Truncates once the geometric tail bound drops below tol * partial sum;
/// throws TruncationError past 10^6 terms and ParameterDomainError for nu <= 0.
double cmp_log_normalizer(double lambda, double nu, double tol = 1e-12);
double cmp_normalizer(double lambda, double nu, double tol = 1e-12);

double count_logpmf(const CountDistSpec& spec, long k);
double count_pmf(const CountDistSpec& spec, long k);
double count_cdf(const CountDistSpec& spec, long k);
double count_mean(const CountDistSpec& spec);
long count_sample(const CountDistSpec& spec, Rng& rng);

/// True when the support is finite ({0..n} or {0..K}).
bool count_support_finite(const CountDistSpec& spec);

/// Contiguous window of support carrying mass >= 1 - tol, grown outward from
/// the mode by always taking the heavier frontier term. Finite-support
/// families return their full support (mass exactly 1).
struct CountSupport {
    long k_lo = 0;
    std::vector<double> pmf;  // pmf[i] corresponds to k_lo + i
    double mass = 0.0;

    long k_hi() const { return k_lo + static_cast<long>(pmf.size()) - 1; }
};

CountSupport truncated_support(const CountDistSpec& spec, double tol);

}  // namespace losmix

#endif
