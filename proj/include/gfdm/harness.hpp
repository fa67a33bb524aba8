#pragma once

#include <optional>
#include <string>

#include "gfdm/analysis.hpp"
#include "gfdm/channel.hpp"
#include "gfdm/config.hpp"
#include "gfdm/receivers.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

enum class ReceiverKind { TimeDgt, FdDgt, Trunc, Ldgt, LdgtStat, Zf };

const char* receiver_kind_tag(ReceiverKind k);
ReceiverKind parse_receiver_kind(const std::string& tag);

struct ReceiverSpec {
    ReceiverKind kind = ReceiverKind::FdDgt;
    int L = 0;  // local receivers only
};

// Channel selection for a run: deterministic unit tap (AWGN) or fading draws
// from the profile.
struct ChannelProfile {
    bool awgn = false;
    std::optional<ChannelStats> stats;  // required when awgn is false

    static ChannelProfile make_awgn() { return ChannelProfile{true, std::nullopt}; }
    static ChannelProfile fading(ChannelStats st) { return ChannelProfile{false, std::move(st)}; }
};

struct BerPoint {
    double snr_db = 0.0;
    long long bits = 0;
    long long errors = 0;
    double ber = 0.0;
};

struct BerCurve {
    std::string receiver;
    std::string config_summary;
    std::vector<BerPoint> points;
    uint64_t master_seed = 0;
};

// One Monte-Carlo point per SNR value: bits -> map -> modulate -> channel ->
// strip -> receive -> detect -> demap -> count. Block count is fixed from
// min_bits, and every block owns a stream derived from (master_seed, point,
// block), so the result is byte-identical under any worker count.
BerCurve run_ber(const Config& cfg, const ReceiverSpec& spec, const ChannelProfile& profile,
                 const std::vector<double>& snr_db_list, long long min_bits,
                 uint64_t master_seed);

struct VarianceRow {
    std::string profile;
    double beta = 0.0;
    int k = 0;
    double variance = 0.0;
};

// Closed-form interference variance swept over roll-off factors and profiles.
// The config contributes (K, M, cp); windows are rebuilt per beta.
std::vector<VarianceRow> run_variance_sweep(const Config& cfg,
                                            const std::vector<std::pair<std::string, ChannelStats>>& stats_list,
                                            const std::vector<double>& beta_list);

struct ComplexityRow {
    Receiver receiver;
    int M = 0;
    int K = 0;
    int L = 0;
    double count = 0.0;
};

std::vector<ComplexityRow> run_complexity_sweep(const std::vector<int>& M_range,
                                                const std::vector<int>& K_set, int L, int J,
                                                int I, int I0);

// Paired-seed comparison: every receiver sees identical bits, channels, and
// noise. Returns the mean squared soft error |Y(k,m) - H(c_k) d(k,m)|^2 per
// symbol for each spec.
std::vector<double> run_paired_mse(const Config& cfg, const std::vector<ReceiverSpec>& specs,
                                   const ChannelProfile& profile, double snr_db, int blocks,
                                   uint64_t master_seed);

}  // namespace gfdm
