#ifndef LOSMIX_CONVOLUTION_HPP
#define LOSMIX_CONVOLUTION_HPP

#include <vector>

#include "losmix/dist_core.hpp"
#include "losmix/rng.hpp"

namespace losmix {

/// Long-stay law: the sum of an integer discharge lag and a continuous
/// recovery period. Its density is the lattice convolution
///   f(y) = sum_k f_cont(y - k) pmf(k),
/// evaluated over a truncated index set carrying count mass >= 1 - trunc_tol.
struct ConvolutiveLongStay {
    CountDistSpec count;
    ContDistSpec cont;
    double trunc_tol = 1e-10;
};

void validate(const ConvolutiveLongStay& model);

double conv_logpdf(const ConvolutiveLongStay& model, double y);
double conv_pdf(const ConvolutiveLongStay& model, double y);
double conv_cdf(const ConvolutiveLongStay& model, double y);
double conv_mean(const ConvolutiveLongStay& model);
double conv_sample1(const ConvolutiveLongStay& model, Rng& rng);
std::vector<double> conv_sample(const ConvolutiveLongStay& model, std::size_t n, Rng& rng);

/// Precomputes the truncated count window once so that many y-evaluations
/// against the same parameters reuse it. This is the object the likelihood
/// kernels loop over.
class LongStayEvaluator {
public:
    explicit LongStayEvaluator(const ConvolutiveLongStay& model);

    double logpdf(double y) const;
    double pdf(double y) const;
    double cdf(double y) const;

    const CountSupport& support() const { return support_; }
    const ConvolutiveLongStay& model() const { return model_; }

    /// Indices [first, last] of the window whose continuous argument y - k is
    /// inside the non-negligible band of the continuous density. Returns
    /// first > last when no term survives.
    void term_range(double y, long& first, long& last) const;

private:
    ConvolutiveLongStay model_;
    CountSupport support_;
    std::vector<double> logpmf_;
    double arg_lo_ = 0.0;  // continuous arguments below this are negligible
    double arg_hi_ = 0.0;
};

}  // namespace losmix

#endif
