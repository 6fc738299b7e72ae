#include "clocksim/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "clocksim/errors.hpp"

namespace clocksim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

Fft::Fft(std::size_t n) : n_(n) {
    if (n < 2 || (n & (n - 1)) != 0) throw GridInvalid("fft: size must be a power of two >= 2");

    bitrev_.resize(n);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < log2n; ++b) {
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
        }
        bitrev_[i] = r;
    }

    constexpr long double two_pi_l = 6.283185307179586476925286766559L;
    twiddle_fwd_.reserve(n - 1);
    twiddle_inv_.reserve(n - 1);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        for (std::size_t k = 0; k < half; ++k) {
            const long double angle =
                two_pi_l * static_cast<long double>(k) / static_cast<long double>(len);
            const std::complex<double> w = nearest_unit_phase(-angle);
            twiddle_fwd_.push_back(w);
            twiddle_inv_.push_back(std::conj(w));
        }
    }
}

void Fft::transform(std::span<std::complex<double>> data, bool invert) const {
    if (data.size() != n_) throw GridInvalid("fft: data length does not match plan size");
    auto* d = data.data();
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t j = bitrev_[i];
        if (j > i) std::swap(d[i], d[j]);
    }
    const std::complex<double>* tw = invert ? twiddle_inv_.data() : twiddle_fwd_.data();
    std::size_t toff = 0;
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::complex<double>* w = tw + toff;
        for (std::size_t base = 0; base < n_; base += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> u = d[base + k];
                const std::complex<double> v = d[base + k + half] * w[k];
                d[base + k] = u + v;
                d[base + k + half] = u - v;
            }
        }
        toff += half;
    }
}

void Fft::forward(std::span<std::complex<double>> data) const { transform(data, false); }

void Fft::inverse_unscaled(std::span<std::complex<double>> data) const { transform(data, true); }

void Fft::inverse(std::span<std::complex<double>> data) const {
    transform(data, true);
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& z : data) z *= scale;
}

std::shared_ptr<const Fft> fft_plan(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const Fft>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_shared<const Fft>(n)).first;
    return it->second;
}

std::complex<double> nearest_unit_phase(long double angle) {
    const double c0 = static_cast<double>(std::cos(angle));
    const double s0 = static_cast<double>(std::sin(angle));
    double cs[5] = {c0}, ss[5] = {s0};
    cs[1] = std::nextafter(c0, 2.0);
    cs[2] = std::nextafter(cs[1], 2.0);
    cs[3] = std::nextafter(c0, -2.0);
    cs[4] = std::nextafter(cs[3], -2.0);
    ss[1] = std::nextafter(s0, 2.0);
    ss[2] = std::nextafter(ss[1], 2.0);
    ss[3] = std::nextafter(s0, -2.0);
    ss[4] = std::nextafter(ss[3], -2.0);
    double best_c = c0, best_s = s0;
    long double best_err = 1.0L;
    for (double c : cs) {
        const long double c2 = static_cast<long double>(c) * static_cast<long double>(c);
        for (double s : ss) {
            const long double m2 = c2 + static_cast<long double>(s) * static_cast<long double>(s);
            const long double err = m2 > 1.0L ? m2 - 1.0L : 1.0L - m2;
            if (err < best_err) {
                best_err = err;
                best_c = c;
                best_s = s;
            }
        }
    }
    return {best_c, best_s};
}

double fft_wavenumber(std::size_t j, std::size_t n, double domain_length) {
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const double signed_index = static_cast<double>(jj < half ? jj : jj - static_cast<std::ptrdiff_t>(n));
    return kTwoPi * signed_index / domain_length;
}

}  // namespace clocksim
