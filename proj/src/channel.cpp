#include "gfdm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gfdm {

int ChannelStats::max_delay() const {
    int m = 0;
    for (int d : delay_samples) m = std::max(m, d);
    return m;
}

ChannelStats stats_from_profile(const std::vector<double>& delays_ns,
                                const std::vector<double>& powers_db,
                                double sample_interval_ns, double f_D, const Config& cfg) {
    if (delays_ns.size() != powers_db.size())
        throw usage_error("channel profile: delay and power lists differ in length");
    if (delays_ns.empty()) throw usage_error("channel profile: empty");
    if (sample_interval_ns <= 0.0) throw usage_error("channel profile: sample interval must be positive");
    if (!std::is_sorted(delays_ns.begin(), delays_ns.end()))
        throw usage_error("channel profile: delays must be sorted");
    if (delays_ns.front() < 0.0) throw usage_error("channel profile: negative delay");

    ChannelStats st;
    st.delays_ns = delays_ns;
    st.powers_db = powers_db;
    st.sample_interval_ns = sample_interval_ns;
    st.delay_samples.resize(delays_ns.size());
    st.powers_lin.resize(delays_ns.size());
    double total = 0.0;
    for (size_t i = 0; i < delays_ns.size(); ++i) {
        st.delay_samples[i] = static_cast<int>(std::lround(delays_ns[i] / sample_interval_ns));
        st.powers_lin[i] = std::pow(10.0, powers_db[i] / 10.0);
        total += st.powers_lin[i];
    }
    for (auto& p : st.powers_lin) p /= total;
    st.P_h = 1.0 / static_cast<double>(st.powers_lin.size());
    st.doppler_kD = f_D * cfg.N * (sample_interval_ns * 1e-9);
    return st;
}

ChannelStats eva_stats(double sample_interval_ns, double f_D, const Config& cfg) {
    static const std::vector<double> delays = {0, 30, 150, 310, 370, 710, 1090, 1730, 2510};
    static const std::vector<double> powers = {0, -1.5, -1.4, -3.6, -0.6, -9.1, -7.0, -12.0, -16.9};
    return stats_from_profile(delays, powers, sample_interval_ns, f_D, cfg);
}

ChannelRealization realize_channel(const ChannelStats& stats, Rng& rng, const Config& cfg) {
    ChannelRealization h;
    h.taps.resize(stats.n_paths());
    for (int i = 0; i < stats.n_paths(); ++i) {
        h.taps[i].delay = stats.delay_samples[i];
        h.taps[i].gain = rng.cgauss(stats.powers_lin[i]);
    }
    h.H.bins.assign(cfg.N, cdouble{0.0, 0.0});
    for (int l = 0; l < cfg.N; ++l) {
        cdouble acc = 0.0;
        for (const auto& tap : h.taps)
            acc += tap.gain * cis(-2.0 * pi * l * tap.delay / cfg.N);
        h.H.bins[l] = acc;
    }
    return h;
}

ChannelRealization ideal_channel(const Config& cfg) {
    ChannelRealization h;
    h.taps.push_back({0, cdouble{1.0, 0.0}});
    h.H.bins.assign(cfg.N, cdouble{1.0, 0.0});
    return h;
}

TimeSignal apply_channel(const TimeSignal& x, const ChannelRealization& h, double noise_sigma,
                         Rng& rng, const Config& cfg) {
    int max_delay = 0;
    for (const auto& tap : h.taps) max_delay = std::max(max_delay, tap.delay);
    if (max_delay > cfg.cp_len)
        throw usage_error("apply_channel: cyclic prefix shorter than maximum channel delay");

    const int len = static_cast<int>(x.samples.size());
    TimeSignal y;
    y.sample_interval_s = x.sample_interval_s;
    y.samples.assign(len, cdouble{0.0, 0.0});
    for (const auto& tap : h.taps) {
        for (int n = tap.delay; n < len; ++n)
            y.samples[n] += tap.gain * x.samples[n - tap.delay];
    }
    if (noise_sigma > 0.0) {
        const double var = noise_sigma * noise_sigma;
        for (int n = 0; n < len; ++n) y.samples[n] += rng.cgauss(var);
    }
    return y;
}

cvec subcarrier_gains(const ChannelRealization& h, const Config& cfg) {
    cvec gains(cfg.K);
    for (int k = 0; k < cfg.K; ++k) gains[k] = h.H.bins[subcarrier_bin(cfg, k)];
    return gains;
}

double tap_correlation(const ChannelStats& stats, int i, int j, int N) {
    const double delta = stats.delay_samples[i] - stats.delay_samples[j];
    const double x = 2.0 * pi * stats.doppler_kD * delta / N;
    return stats.P_h * std::cyl_bessel_j(0.0, std::abs(x));
}

cdouble freq_covariance(const ChannelStats& stats, int a, int b, int N) {
    cdouble acc = 0.0;
    for (int i = 0; i < stats.n_paths(); ++i)
        for (int j = 0; j < stats.n_paths(); ++j)
            acc += tap_correlation(stats, i, j, N) *
                   cis(-2.0 * pi * (static_cast<double>(a) * stats.delay_samples[i] -
                                    static_cast<double>(b) * stats.delay_samples[j]) / N);
    return acc;
}

}  // namespace gfdm
