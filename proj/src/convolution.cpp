#include "losmix/convolution.hpp"

#include <algorithm>
#include <cmath>

#include "losmix/errors.hpp"
#include "losmix/math.hpp"

namespace losmix {

void validate(const ConvolutiveLongStay& model) {
    validate(model.count);
    validate(model.cont);
    if (!(model.trunc_tol > 0.0) || model.trunc_tol > 1e-3)
        throw ParameterDomainError("trunc_tol must lie in (0, 1e-3]");
}

LongStayEvaluator::LongStayEvaluator(const ConvolutiveLongStay& model) : model_(model) {
    validate(model);
    support_ = truncated_support(model.count, model.trunc_tol);
    logpmf_.resize(support_.pmf.size());
    for (std::size_t i = 0; i < support_.pmf.size(); ++i)
        logpmf_[i] = support_.pmf[i] > 0.0 ? std::log(support_.pmf[i]) : kNegInf;

    // Band of continuous arguments with non-negligible density: 10 sigma
    // around the location (in log space for the log-normal). Terms outside
    // contribute below double resolution relative to the peak.
    const ContDistSpec& c = model.cont;
    if (c.family == ContFamily::Normal) {
        arg_lo_ = c.mu - 10.0 * c.sigma;
        arg_hi_ = c.mu + 10.0 * c.sigma;
    } else {
        arg_lo_ = std::exp(c.mu - 10.0 * c.sigma);
        arg_hi_ = std::exp(c.mu + 10.0 * c.sigma);
    }
}

void LongStayEvaluator::term_range(double y, long& first, long& last) const {
    const long w = static_cast<long>(support_.pmf.size());
    first = 0;
    last = w - 1;
    if (w == 1) return;  // single atom: always evaluate it directly
    // y - k in [arg_lo, arg_hi]  <=>  k in [y - arg_hi, y - arg_lo]
    const double k_min = y - arg_hi_;
    const double k_max = y - arg_lo_;
    first = std::max<long>(first, static_cast<long>(std::ceil(k_min)) - support_.k_lo);
    last = std::min<long>(last, static_cast<long>(std::floor(k_max)) - support_.k_lo);
}

double LongStayEvaluator::logpdf(double y) const {
    long first = 0, last = 0;
    term_range(y, first, last);
    if (first > last) return kNegInf;
    // log-sum-exp over the surviving terms
    double max_term = kNegInf;
    for (long i = first; i <= last; ++i) {
        const double lp = logpmf_[static_cast<std::size_t>(i)];
        if (lp == kNegInf) continue;
        const double t = lp + cont_logpdf(model_.cont, y - static_cast<double>(support_.k_lo + i));
        if (t > max_term) max_term = t;
    }
    if (max_term == kNegInf) return kNegInf;
    double s = 0.0;
    for (long i = first; i <= last; ++i) {
        const double lp = logpmf_[static_cast<std::size_t>(i)];
        if (lp == kNegInf) continue;
        const double t = lp + cont_logpdf(model_.cont, y - static_cast<double>(support_.k_lo + i));
        s += std::exp(t - max_term);
    }
    return max_term + std::log(s);
}

double LongStayEvaluator::pdf(double y) const { return std::exp(logpdf(y)); }

double LongStayEvaluator::cdf(double y) const {
    double s = 0.0;
    for (std::size_t i = 0; i < support_.pmf.size(); ++i) {
        const double k = static_cast<double>(support_.k_lo + static_cast<long>(i));
        s += support_.pmf[i] * cont_cdf(model_.cont, y - k);
    }
    return std::min(s, 1.0);
}

double conv_logpdf(const ConvolutiveLongStay& model, double y) {
    return LongStayEvaluator(model).logpdf(y);
}

double conv_pdf(const ConvolutiveLongStay& model, double y) {
    return LongStayEvaluator(model).pdf(y);
}

double conv_cdf(const ConvolutiveLongStay& model, double y) {
    return LongStayEvaluator(model).cdf(y);
}

double conv_mean(const ConvolutiveLongStay& model) {
    validate(model);
    return count_mean(model.count) + cont_mean(model.cont);
}

double conv_sample1(const ConvolutiveLongStay& model, Rng& rng) {
    validate(model);
    const long k = count_sample(model.count, rng);
    return static_cast<double>(k) + cont_sample(model.cont, rng);
}

std::vector<double> conv_sample(const ConvolutiveLongStay& model, std::size_t n, Rng& rng) {
    validate(model);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = conv_sample1(model, rng);
    return out;
}

}  // namespace losmix
