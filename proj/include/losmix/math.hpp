#ifndef LOSMIX_MATH_HPP
#define LOSMIX_MATH_HPP

#include <cmath>
#include <limits>
#include <span>

namespace losmix {

inline constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without overflow; handles -inf operands.
inline double log_sum_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = a > b ? a : b;
    return m + std::log1p(std::exp(-(std::abs(a - b))));
}

/// log(sum exp(v_i)); -inf for an empty or all--inf span.
inline double log_sum_exp(std::span<const double> v) {
    double m = kNegInf;
    for (double x : v)
        if (x > m) m = x;
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (double x : v) s += std::exp(x - m);
    return m + std::log(s);
}

/// log(1 + exp(t)), stable for large |t|.
inline double log1p_exp(double t) {
    if (t > 35.0) return t;
    if (t < -35.0) return std::exp(t);
    return std::log1p(std::exp(t));
}

/// Logistic function, stable at both tails.
inline double inv_logit(double t) {
    if (t >= 0.0) {
        const double e = std::exp(-t);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(t);
    return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p) - std::log1p(-p); }

/// Deterministic pairwise summation. Fixed association order, so the result
/// does not depend on how the input buffer was produced.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t mid = v.size() / 2;
    return pairwise_sum(v.first(mid)) + pairwise_sum(v.subspan(mid));
}

/// Standard normal density and CDF.
inline double norm_logpdf(double z) { return -0.5 * (z * z + kLog2Pi); }
inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace losmix

#endif
