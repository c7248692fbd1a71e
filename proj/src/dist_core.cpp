#include "losmix/dist_core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "losmix/errors.hpp"
#include "losmix/math.hpp"

namespace losmix {

namespace {

constexpr long kSeriesCap = 1000000;

double require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw ParameterDomainError(std::string(what) + " must be finite");
    return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Continuous laws
// ---------------------------------------------------------------------------

ContDistSpec normal_spec(double mu, double sigma) {
    ContDistSpec s{ContFamily::Normal, mu, sigma};
    validate(s);
    return s;
}

ContDistSpec lognormal_spec(double mu, double sigma) {
    ContDistSpec s{ContFamily::LogNormal, mu, sigma};
    validate(s);
    return s;
}

void validate(const ContDistSpec& spec) {
    require_finite(spec.mu, "mu");
    require_finite(spec.sigma, "sigma");
    if (spec.sigma <= 0.0)
        throw ParameterDomainError("sigma must be > 0, got " + std::to_string(spec.sigma));
}

double cont_logpdf(const ContDistSpec& spec, double x) {
    validate(spec);
    switch (spec.family) {
        case ContFamily::Normal: {
            const double z = (x - spec.mu) / spec.sigma;
            return norm_logpdf(z) - std::log(spec.sigma);
        }
        case ContFamily::LogNormal: {
            if (x <= 0.0) return kNegInf;
            const double lx = std::log(x);
            const double z = (lx - spec.mu) / spec.sigma;
            return norm_logpdf(z) - std::log(spec.sigma) - lx;
        }
    }
    return kNegInf;
}

double cont_pdf(const ContDistSpec& spec, double x) { return std::exp(cont_logpdf(spec, x)); }

double cont_cdf(const ContDistSpec& spec, double x) {
    validate(spec);
    switch (spec.family) {
        case ContFamily::Normal:
            return norm_cdf((x - spec.mu) / spec.sigma);
        case ContFamily::LogNormal:
            if (x <= 0.0) return 0.0;
            return norm_cdf((std::log(x) - spec.mu) / spec.sigma);
    }
    return 0.0;
}

double cont_mean(const ContDistSpec& spec) {
    validate(spec);
    return spec.family == ContFamily::Normal
               ? spec.mu
               : std::exp(spec.mu + 0.5 * spec.sigma * spec.sigma);
}

double cont_sd(const ContDistSpec& spec) {
    validate(spec);
    if (spec.family == ContFamily::Normal) return spec.sigma;
    const double s2 = spec.sigma * spec.sigma;
    return std::sqrt((std::exp(s2) - 1.0)) * std::exp(spec.mu + 0.5 * s2);
}

double cont_sample(const ContDistSpec& spec, Rng& rng) {
    validate(spec);
    const double z = spec.mu + spec.sigma * rng.normal01();
    return spec.family == ContFamily::Normal ? z : std::exp(z);
}

// ---------------------------------------------------------------------------
// Count laws
// ---------------------------------------------------------------------------

CountDistSpec negbin_spec(double r, double p) {
    CountDistSpec s;
    s.family = CountFamily::NegBin;
    s.r = r;
    s.p = p;
    validate(s);
    return s;
}

CountDistSpec poisson_spec(double lambda) {
    CountDistSpec s;
    s.family = CountFamily::Poisson;
    s.lambda = lambda;
    validate(s);
    return s;
}

CountDistSpec cmp_spec(double lambda, double nu) {
    CountDistSpec s;
    s.family = CountFamily::Cmp;
    s.lambda = lambda;
    s.nu = nu;
    validate(s);
    return s;
}

CountDistSpec binomial_spec(long n, double p) {
    CountDistSpec s;
    s.family = CountFamily::Binomial;
    s.n = n;
    s.p = p;
    validate(s);
    return s;
}

CountDistSpec multinomial_spec(std::vector<double> weights) {
    CountDistSpec s;
    s.family = CountFamily::Multinomial;
    s.weights = std::move(weights);
    validate(s);
    return s;
}

void validate(const CountDistSpec& spec) {
    switch (spec.family) {
        case CountFamily::NegBin:
            require_finite(spec.r, "r");
            require_finite(spec.p, "p");
            if (spec.r <= 0.0) throw ParameterDomainError("NegBin r must be > 0");
            if (spec.p <= 0.0 || spec.p >= 1.0)
                throw ParameterDomainError("NegBin p must be in (0,1)");
            return;
        case CountFamily::Poisson:
            require_finite(spec.lambda, "lambda");
            if (spec.lambda <= 0.0) throw ParameterDomainError("Poisson lambda must be > 0");
            return;
        case CountFamily::Cmp:
            require_finite(spec.lambda, "lambda");
            require_finite(spec.nu, "nu");
            if (spec.lambda <= 0.0) throw ParameterDomainError("CMP lambda must be > 0");
            if (spec.nu <= 0.0) throw ParameterDomainError("CMP nu must be > 0");
            return;
        case CountFamily::Binomial:
            require_finite(spec.p, "p");
            if (spec.n < 0) throw ParameterDomainError("Binomial n must be >= 0");
            if (spec.p < 0.0 || spec.p > 1.0)
                throw ParameterDomainError("Binomial p must be in [0,1]");
            return;
        case CountFamily::Multinomial: {
            if (spec.weights.empty())
                throw ParameterDomainError("Multinomial needs at least one weight");
            double sum = 0.0;
            for (double w : spec.weights) {
                require_finite(w, "weight");
                if (w < 0.0) throw ParameterDomainError("Multinomial weights must be >= 0");
                sum += w;
            }
            if (std::abs(sum - 1.0) > 1e-12)
                throw ParameterDomainError("Multinomial weights must sum to 1, got " +
                                           std::to_string(sum));
            return;
        }
    }
}

double cmp_log_normalizer(double lambda, double nu, double tol) {
    if (!(tol > 0.0)) throw ParameterDomainError("tol must be > 0");
    if (!(lambda > 0.0)) throw ParameterDomainError("CMP lambda must be > 0");
    if (!(nu > 0.0)) throw ParameterDomainError("CMP nu must be > 0 (series diverges)");
    const double log_lambda = std::log(lambda);
    double log_z = kNegInf;
    const double log_tol = std::log(tol);
    for (long j = 0;; ++j) {
        if (j > kSeriesCap)
            throw TruncationError("CMP normalizer exceeded term cap", std::exp(log_z));
        const double term = j * log_lambda - nu * std::lgamma(static_cast<double>(j) + 1.0);
        log_z = log_sum_exp(log_z, term);
        // Once terms decay geometrically, bound the tail by the next term's
        // geometric series and stop when it is negligible next to Z so far.
        const double ratio = lambda / std::pow(static_cast<double>(j) + 1.0, nu);
        if (ratio < 1.0) {
            const double log_tail = term + std::log(ratio) - std::log1p(-ratio);
            if (log_tail - log_z < log_tol) break;
        }
    }
    return log_z;
}

double cmp_normalizer(double lambda, double nu, double tol) {
    return std::exp(cmp_log_normalizer(lambda, nu, tol));
}

double count_logpmf(const CountDistSpec& spec, long k) {
    validate(spec);
    if (k < 0) return kNegInf;
    const double kd = static_cast<double>(k);
    switch (spec.family) {
        case CountFamily::NegBin:
            // Gamma(r+k) / (Gamma(r) k!) p^r (1-p)^k
            return std::lgamma(spec.r + kd) - std::lgamma(spec.r) - std::lgamma(kd + 1.0) +
                   spec.r * std::log(spec.p) + kd * std::log1p(-spec.p);
        case CountFamily::Poisson:
            return kd * std::log(spec.lambda) - spec.lambda - std::lgamma(kd + 1.0);
        case CountFamily::Cmp:
            return kd * std::log(spec.lambda) - spec.nu * std::lgamma(kd + 1.0) -
                   cmp_log_normalizer(spec.lambda, spec.nu);
        case CountFamily::Binomial: {
            if (k > spec.n) return kNegInf;
            if (spec.p == 0.0) return k == 0 ? 0.0 : kNegInf;
            if (spec.p == 1.0) return k == spec.n ? 0.0 : kNegInf;
            const double nd = static_cast<double>(spec.n);
            return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0) +
                   kd * std::log(spec.p) + (nd - kd) * std::log1p(-spec.p);
        }
        case CountFamily::Multinomial: {
            if (k >= static_cast<long>(spec.weights.size())) return kNegInf;
            const double w = spec.weights[static_cast<std::size_t>(k)];
            return w > 0.0 ? std::log(w) : kNegInf;
        }
    }
    return kNegInf;
}

double count_pmf(const CountDistSpec& spec, long k) { return std::exp(count_logpmf(spec, k)); }

namespace {

// pmf(k+1) / pmf(k); valid for the families with a stable two-term recurrence.
double pmf_ratio(const CountDistSpec& spec, long k) {
    const double kd = static_cast<double>(k);
    switch (spec.family) {
        case CountFamily::NegBin:
            return (spec.r + kd) * (1.0 - spec.p) / (kd + 1.0);
        case CountFamily::Poisson:
            return spec.lambda / (kd + 1.0);
        case CountFamily::Cmp:
            return spec.lambda / std::pow(kd + 1.0, spec.nu);
        case CountFamily::Binomial:
            if (k >= spec.n) return 0.0;
            return (static_cast<double>(spec.n) - kd) / (kd + 1.0) * spec.p / (1.0 - spec.p);
        case CountFamily::Multinomial:
            break;  // no recurrence; handled by direct lookup
    }
    return 0.0;
}

long count_mode(const CountDistSpec& spec) {
    switch (spec.family) {
        case CountFamily::NegBin:
            if (spec.r <= 1.0) return 0;
            return static_cast<long>(std::floor((spec.r - 1.0) * (1.0 - spec.p) / spec.p));
        case CountFamily::Poisson:
            return static_cast<long>(std::floor(spec.lambda));
        case CountFamily::Cmp:
            return static_cast<long>(std::floor(std::pow(spec.lambda, 1.0 / spec.nu)));
        default:
            return 0;
    }
}

}  // namespace

bool count_support_finite(const CountDistSpec& spec) {
    return spec.family == CountFamily::Binomial || spec.family == CountFamily::Multinomial;
}

double count_cdf(const CountDistSpec& spec, long k) {
    validate(spec);
    if (k < 0) return 0.0;
    if (spec.family == CountFamily::Multinomial) {
        const long hi = std::min<long>(k, static_cast<long>(spec.weights.size()) - 1);
        double s = 0.0;
        for (long j = 0; j <= hi; ++j) s += spec.weights[static_cast<std::size_t>(j)];
        return std::min(s, 1.0);
    }
    if (spec.family == CountFamily::Binomial && (spec.p == 0.0 || spec.p == 1.0))
        return (spec.p == 0.0 || k >= spec.n) ? 1.0 : 0.0;
    double v = count_pmf(spec, 0);
    double s = v;
    const long hi = count_support_finite(spec) ? std::min<long>(k, spec.n) : k;
    for (long j = 0; j < hi; ++j) {
        v *= pmf_ratio(spec, j);
        s += v;
    }
    return std::min(s, 1.0);
}

double count_mean(const CountDistSpec& spec) {
    validate(spec);
    switch (spec.family) {
        case CountFamily::NegBin:
            return spec.r * (1.0 - spec.p) / spec.p;
        case CountFamily::Poisson:
            return spec.lambda;
        case CountFamily::Cmp: {
            const CountSupport sup = truncated_support(spec, 1e-14);
            double m = 0.0;
            for (std::size_t i = 0; i < sup.pmf.size(); ++i)
                m += static_cast<double>(sup.k_lo + static_cast<long>(i)) * sup.pmf[i];
            return m;
        }
        case CountFamily::Binomial:
            return static_cast<double>(spec.n) * spec.p;
        case CountFamily::Multinomial: {
            double m = 0.0;
            for (std::size_t i = 0; i < spec.weights.size(); ++i)
                m += static_cast<double>(i) * spec.weights[i];
            return m;
        }
    }
    return 0.0;
}

long count_sample(const CountDistSpec& spec, Rng& rng) {
    validate(spec);
    const double u = rng.uniform01();
    if (spec.family == CountFamily::Multinomial) {
        double cum = 0.0;
        for (std::size_t i = 0; i < spec.weights.size(); ++i) {
            cum += spec.weights[i];
            if (u <= cum) return static_cast<long>(i);
        }
        return static_cast<long>(spec.weights.size()) - 1;
    }
    if (spec.family == CountFamily::Binomial && (spec.p == 0.0 || spec.p == 1.0))
        return spec.p == 0.0 ? 0 : spec.n;
    // inverse-CDF walk on the pmf recurrence
    double v = count_pmf(spec, 0);
    double cum = v;
    long k = 0;
    const long cap = count_support_finite(spec) ? spec.n : kSeriesCap;
    while (u > cum && k < cap) {
        v *= pmf_ratio(spec, k);
        ++k;
        cum += v;
    }
    return k;
}

CountSupport truncated_support(const CountDistSpec& spec, double tol) {
    validate(spec);
    if (!(tol > 0.0)) throw ParameterDomainError("truncation tol must be > 0");

    CountSupport sup;
    if (count_support_finite(spec)) {
        const long hi = spec.family == CountFamily::Binomial
                            ? spec.n
                            : static_cast<long>(spec.weights.size()) - 1;
        sup.k_lo = 0;
        sup.pmf.resize(static_cast<std::size_t>(hi) + 1);
        for (long k = 0; k <= hi; ++k)
            sup.pmf[static_cast<std::size_t>(k)] = count_pmf(spec, k);
        sup.mass = std::accumulate(sup.pmf.begin(), sup.pmf.end(), 0.0);
        return sup;
    }

    // Cache the CMP normalizer so the expansion does not recompute the series
    // for every pmf evaluation.
    double cmp_log_z = 0.0;
    if (spec.family == CountFamily::Cmp)
        cmp_log_z = cmp_log_normalizer(spec.lambda, spec.nu);
    auto logpmf = [&](long k) {
        if (spec.family == CountFamily::Cmp)
            return static_cast<double>(k) * std::log(spec.lambda) -
                   spec.nu * std::lgamma(static_cast<double>(k) + 1.0) - cmp_log_z;
        return count_logpmf(spec, k);
    };

    const long mode = std::max<long>(0, count_mode(spec));
    std::deque<double> window;
    long lo = mode, hi = mode;
    double v_mode = std::exp(logpmf(mode));
    window.push_back(v_mode);
    double mass = v_mode;
    double right = window.back() * pmf_ratio(spec, hi);
    double left = lo > 0 ? window.front() / pmf_ratio(spec, lo - 1) : 0.0;

    while (mass < 1.0 - tol) {
        if (static_cast<long>(window.size()) > kSeriesCap)
            throw TruncationError("count support expansion exceeded term cap", mass);
        if (right <= 0.0 && (lo == 0 || left <= 0.0)) break;  // float floor reached
        if (lo > 0 && left > right) {
            --lo;
            window.push_front(left);
            mass += left;
            left = lo > 0 ? window.front() / pmf_ratio(spec, lo - 1) : 0.0;
        } else {
            ++hi;
            window.push_back(right);
            mass += right;
            right = window.back() * pmf_ratio(spec, hi);
        }
    }

    sup.k_lo = lo;
    sup.pmf.assign(window.begin(), window.end());
    sup.mass = mass;
    return sup;
}

}  // namespace losmix
