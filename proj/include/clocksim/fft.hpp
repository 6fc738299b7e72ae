#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace clocksim {

/// In-place radix-2 FFT for power-of-two sizes. Twiddles and the bit-reversal
/// permutation are precomputed once per size so repeated transforms are cheap
/// and bit-deterministic.
///
/// forward:  X[j] = sum_i x[i] exp(-2*pi*i*ij/n)
/// inverse:  x[i] = (1/n) sum_j X[j] exp(+2*pi*i*ij/n)
class Fft {
public:
    explicit Fft(std::size_t n);

    std::size_t size() const { return n_; }
    void forward(std::span<std::complex<double>> data) const;
    void inverse(std::span<std::complex<double>> data) const;

    /// Unnormalized inverse pass (no 1/n); callers fold the factor elsewhere.
    void inverse_unscaled(std::span<std::complex<double>> data) const;

private:
    void transform(std::span<std::complex<double>> data, bool invert) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::complex<double>> twiddle_fwd_;  // exp(-i*pi*k/m) tables, all stages concatenated
    std::vector<std::complex<double>> twiddle_inv_;
};

/// Shared per-size plan cache; safe to call from multiple threads.
std::shared_ptr<const Fft> fft_plan(std::size_t n);

/// Wavenumber of FFT bin j for a periodic domain of the given length, in the
/// standard layout: bins 0..n/2-1 are non-negative, n/2..n-1 are negative.
double fft_wavenumber(std::size_t j, std::size_t n, double domain_length);

/// exp(i*angle) snapped to the representable pair nearest the unit circle
/// (a few-ulp search around the rounded cos/sin). The angle error stays at
/// machine precision while |w|^2 - 1 drops to ~1e-18, so long products of
/// such factors conserve norms to a random walk instead of a linear drift.
std::complex<double> nearest_unit_phase(long double angle);

}  // namespace clocksim
