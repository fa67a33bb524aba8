#pragma once

#include "gfdm/channel.hpp"
#include "gfdm/config.hpp"
#include "gfdm/types.hpp"
#include "gfdm/windows.hpp"

namespace gfdm {

// R_H(l, lbar, b): covariance of the channel deviation from the reference bin,
// E{(H(l) - H(b))* (H(lbar) - H(b))}, under the Jakes-correlated tap model.
cdouble deviation_covariance(int l, int lbar, int ref_bin, const ChannelStats& stats,
                             const Config& cfg);

// Same with the reference bin at subcarrier k's band center.
cdouble channel_covariance(int l, int lbar, int k, const ChannelStats& stats, const Config& cfg);

// Closed-form variance of the residual interference after the whole-band
// receiver on subcarrier k (independent of m).
double interference_variance(int k, int m, const FreqWindow& G, const FreqWindow& Gamma,
                             const ChannelStats& stats, const Config& cfg);

// Noise variance after analysis: N sigma^2 ||window||^2 with the stored scale
// (full-band spectra implicitly carry 1/N; local windows store it).
double noise_variance(const FreqWindow& Gamma, double sigma, const Config& cfg);
double noise_variance(const LocalWindow& w, double sigma, const Config& cfg);

enum class Receiver { OFDM, ZfDirect, MfSic, FftMfZf, ZfMfSplit, FdDgt, Ldgt };

const char* receiver_tag(Receiver r);
Receiver parse_receiver_tag(const std::string& tag);

struct ComplexityParams {
    int M = 0;
    int K = 0;
    int L = 0;
    int J = 0;   // constellation size
    int I = 2;   // receiver filter span
    int I0 = 8;  // interference-cancellation iterations
};

struct ComplexityReport {
    Receiver receiver;
    double multiplications;  // exact row evaluation; integer whenever MK is a power of two
    ComplexityParams params;
};

// Complex-multiplication count for one receiver. soft_output drops the
// constellation-detection terms (decoder-feed variant).
double complexity_count(Receiver r, const ComplexityParams& p, bool soft_output = false);

ComplexityReport complexity(Receiver r, const ComplexityParams& p, bool soft_output = false);

}  // namespace gfdm
