#pragma once

#include "gfdm/config.hpp"
#include "gfdm/rng.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

// Multipath profile plus the closed-form covariance parameters. Tap delays are
// kept both raw (ns) and rounded to samples; powers are linear, unit total.
struct ChannelStats {
    std::vector<double> delays_ns;
    std::vector<double> powers_db;
    std::vector<int> delay_samples;
    std::vector<double> powers_lin;  // normalized to unit total
    double sample_interval_ns = 0.0;
    double doppler_kD = 0.0;  // discrete maximum Doppler shift in bins
    double P_h = 0.0;         // average linear power per path

    int n_paths() const { return static_cast<int>(delay_samples.size()); }
    int max_delay() const;
};

struct ChannelRealization {
    struct Tap {
        int delay;
        cdouble gain;
    };
    std::vector<Tap> taps;
    Spectrum H;  // length-N response, H(l) = sum taps gain * e^{-j2pi l delay/N}
};

// 3GPP Extended Vehicular A profile, delays rounded to the sampling grid.
ChannelStats eva_stats(double sample_interval_ns, double f_D, const Config& cfg);

// Arbitrary profile; same rounding, normalization, and Doppler bookkeeping.
ChannelStats stats_from_profile(const std::vector<double>& delays_ns,
                                const std::vector<double>& powers_db,
                                double sample_interval_ns, double f_D, const Config& cfg);

// Quasi-static block fading: each tap drawn circular complex Gaussian with the
// profile's linear power as variance.
ChannelRealization realize_channel(const ChannelStats& stats, Rng& rng, const Config& cfg);

// Deterministic unit tap at delay zero (AWGN-only runs).
ChannelRealization ideal_channel(const Config& cfg);

// Linear convolution truncated to the frame length, plus AWGN of per-sample
// variance sigma^2. Requires cp_len >= max tap delay.
TimeSignal apply_channel(const TimeSignal& x, const ChannelRealization& h, double noise_sigma,
                         Rng& rng, const Config& cfg);

// Genie gains at the subcarrier band centers.
cvec subcarrier_gains(const ChannelRealization& h, const Config& cfg);

// Jakes tap correlation E{h*(d_i) h(d_j)} = P_h * J0(2 pi k_D (d_i - d_j)/N).
double tap_correlation(const ChannelStats& stats, int i, int j, int N);

// E{H(a) H*(b)} under the Jakes-correlated equal-power tap model.
cdouble freq_covariance(const ChannelStats& stats, int a, int b, int N);

}  // namespace gfdm
