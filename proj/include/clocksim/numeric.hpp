#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace clocksim {

/// Compensated (Neumaier) running sum. Accumulation order is the call order.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> terms) {
    CompensatedSum acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

/// Least-squares line y = a + b*x. Returns {intercept, slope}.
inline std::pair<double, double> linear_fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }
    const double slope = sxy / sxx;
    return {my - slope * mx, slope};
}

/// Unwraps a sampled phase series so consecutive samples differ by less than pi.
inline std::vector<double> unwrap_phases(std::span<const double> wrapped) {
    std::vector<double> out(wrapped.size());
    if (wrapped.empty()) return out;
    out[0] = wrapped[0];
    constexpr double two_pi = 6.283185307179586476925287;
    for (std::size_t i = 1; i < wrapped.size(); ++i) {
        double d = wrapped[i] - wrapped[i - 1];
        d -= two_pi * std::round(d / two_pi);
        out[i] = out[i - 1] + d;
    }
    return out;
}

}  // namespace clocksim
