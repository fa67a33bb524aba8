#include "gfdm/harness.hpp"

#include <cmath>
#include <sstream>

#include "gfdm/modem.hpp"

namespace gfdm {

const char* receiver_kind_tag(ReceiverKind k) {
    switch (k) {
        case ReceiverKind::TimeDgt: return "time-dgt";
        case ReceiverKind::FdDgt: return "fd-dgt";
        case ReceiverKind::Trunc: return "trunc";
        case ReceiverKind::Ldgt: return "ldgt";
        case ReceiverKind::LdgtStat: return "ldgt-stat";
        case ReceiverKind::Zf: return "zf";
    }
    return "?";
}

ReceiverKind parse_receiver_kind(const std::string& tag) {
    for (ReceiverKind k : {ReceiverKind::TimeDgt, ReceiverKind::FdDgt, ReceiverKind::Trunc,
                           ReceiverKind::Ldgt, ReceiverKind::LdgtStat, ReceiverKind::Zf})
        if (tag == receiver_kind_tag(k)) return k;
    throw usage_error("unknown receiver: " + tag);
}

namespace {

// Windows a receiver spec needs, built once per run.
struct ReceiverBundle {
    FreqWindow G;
    FreqWindow Gamma;
    cvec gamma_time;      // TimeDgt
    LocalWindow local;    // Trunc / Ldgt / LdgtStat
};

ReceiverBundle prepare_bundle(const Config& cfg, const ReceiverSpec& spec,
                              const ChannelProfile& profile) {
    ReceiverBundle b;
    b.G = rc_synthesis_window(cfg);
    b.Gamma = dual_window_fullband(b.G, cfg);
    switch (spec.kind) {
        case ReceiverKind::TimeDgt:
            b.gamma_time = analysis_time_window(b.Gamma, cfg);
            break;
        case ReceiverKind::Trunc:
            b.local = truncate_fullband(b.Gamma, spec.L);
            break;
        case ReceiverKind::Ldgt:
            b.local = ldgt_window_ideal(build_local_system(b.G, spec.L, cfg));
            break;
        case ReceiverKind::LdgtStat: {
            ChannelStats st;
            if (profile.awgn || !profile.stats) {
                // Degenerate single-path statistics; equals the ideal window.
                st = stats_from_profile({0.0}, {0.0}, 1.0, 0.0, cfg);
            } else {
                st = *profile.stats;
            }
            b.local = ldgt_window_stat(build_local_system(b.G, spec.L, cfg), st, cfg);
            break;
        }
        default:
            break;
    }
    return b;
}

SymbolGrid run_receiver(const ReceiverSpec& spec, const ReceiverBundle& b, const TimeSignal& rx,
                        const ChannelRealization& h, const Config& cfg) {
    switch (spec.kind) {
        case ReceiverKind::TimeDgt: {
            TimeSignal block;
            block.samples = strip_cyclic_prefix(rx, cfg);
            return dgt_time(block, b.gamma_time, cfg);
        }
        case ReceiverKind::FdDgt:
            return fd_dgt_receive(strip_and_transform(rx, cfg), b.Gamma, cfg);
        case ReceiverKind::Trunc:
            return truncated_fd_dgt_receive(strip_and_transform(rx, cfg), b.local, cfg);
        case ReceiverKind::Ldgt:
        case ReceiverKind::LdgtStat:
            return ldgt_receive(strip_and_transform(rx, cfg), b.local, cfg);
        case ReceiverKind::Zf:
            return zf_oracle_receive(rx, h, b.G, cfg);
    }
    throw usage_error("run_receiver: unknown kind");
}

std::string summarize(const Config& cfg) {
    std::ostringstream os;
    os << "K=" << cfg.K << " M=" << cfg.M << " beta=" << cfg.beta << " tau=" << cfg.tau
       << " cp=" << cfg.cp_len << " " << to_string(cfg.constellation);
    return os.str();
}

}  // namespace

BerCurve run_ber(const Config& cfg, const ReceiverSpec& spec, const ChannelProfile& profile,
                 const std::vector<double>& snr_db_list, long long min_bits,
                 uint64_t master_seed) {
    if (!profile.awgn && !profile.stats) throw usage_error("run_ber: fading profile needs stats");
    if (!profile.awgn && profile.stats->max_delay() > cfg.cp_len)
        throw usage_error("run_ber: cyclic prefix shorter than maximum channel delay");
    const ReceiverBundle bundle = prepare_bundle(cfg, spec, profile);
    const int bps = bits_per_symbol(cfg.constellation);
    const long long bits_per_block = static_cast<long long>(cfg.N) * bps;
    const long long blocks = std::max<long long>(1, (min_bits + bits_per_block - 1) / bits_per_block);

    BerCurve curve;
    curve.receiver = receiver_kind_tag(spec.kind);
    curve.config_summary = summarize(cfg);
    curve.master_seed = master_seed;

    for (size_t pt = 0; pt < snr_db_list.size(); ++pt) {
        const double snr_db = snr_db_list[pt];
        const double sigma = std::sqrt(std::pow(10.0, -snr_db / 10.0));
        std::vector<long long> block_errors(blocks, 0);
        std::string fail_msg;

        #pragma omp parallel for schedule(static)
        for (long long blk = 0; blk < blocks; ++blk) {
            try {
                Rng rng(derive_seed(master_seed, pt, static_cast<uint64_t>(blk)));
                std::vector<uint8_t> bits(bits_per_block);
                for (auto& b : bits) b = rng.bit();
                SymbolGrid d = map_bits(bits, cfg);
                TimeSignal tx = modulate(d, bundle.G, cfg);
                ChannelRealization h =
                    profile.awgn ? ideal_channel(cfg) : realize_channel(*profile.stats, rng, cfg);
                TimeSignal rx = apply_channel(tx, h, sigma, rng, cfg);
                SymbolGrid soft = run_receiver(spec, bundle, rx, h, cfg);
                SymbolGrid hard = detect(soft, subcarrier_gains(h, cfg), cfg);
                std::vector<uint8_t> got = demap_symbols(hard, cfg);
                long long errs = 0;
                for (size_t i = 0; i < bits.size(); ++i) errs += bits[i] != got[i];
                block_errors[blk] = errs;
            } catch (const std::exception& e) {
                #pragma omp critical
                if (fail_msg.empty()) fail_msg = e.what();
            }
        }
        if (!fail_msg.empty()) throw numerical_error("run_ber: " + fail_msg);

        BerPoint point;
        point.snr_db = snr_db;
        point.bits = blocks * bits_per_block;
        point.errors = 0;
        for (long long e : block_errors) point.errors += e;
        point.ber = static_cast<double>(point.errors) / static_cast<double>(point.bits);
        curve.points.push_back(point);
    }
    return curve;
}

std::vector<VarianceRow> run_variance_sweep(
    const Config& cfg, const std::vector<std::pair<std::string, ChannelStats>>& stats_list,
    const std::vector<double>& beta_list) {
    std::vector<VarianceRow> rows;
    for (double beta : beta_list) {
        Config bcfg = build_config(cfg.K, cfg.M, beta, cfg.cp_len, cfg.constellation);
        FreqWindow G = rc_synthesis_window(bcfg);
        FreqWindow Gamma = dual_window_fullband(G, bcfg);
        for (const auto& [name, stats] : stats_list) {
            std::vector<double> vark(bcfg.K, 0.0);
            #pragma omp parallel for schedule(static)
            for (int k = 0; k < bcfg.K; ++k)
                vark[k] = interference_variance(k, 0, G, Gamma, stats, bcfg);
            for (int k = 0; k < bcfg.K; ++k)
                rows.push_back(VarianceRow{name, beta, k, vark[k]});
        }
    }
    return rows;
}

std::vector<ComplexityRow> run_complexity_sweep(const std::vector<int>& M_range,
                                                const std::vector<int>& K_set, int L, int J,
                                                int I, int I0) {
    std::vector<ComplexityRow> rows;
    for (int K : K_set) {
        for (int M : M_range) {
            ComplexityParams p{M, K, L, J, I, I0};
            for (Receiver r : {Receiver::OFDM, Receiver::ZfDirect, Receiver::MfSic,
                               Receiver::FftMfZf, Receiver::ZfMfSplit, Receiver::FdDgt,
                               Receiver::Ldgt})
                rows.push_back(ComplexityRow{r, M, K, L, complexity_count(r, p)});
        }
    }
    return rows;
}

std::vector<double> run_paired_mse(const Config& cfg, const std::vector<ReceiverSpec>& specs,
                                   const ChannelProfile& profile, double snr_db, int blocks,
                                   uint64_t master_seed) {
    if (!profile.awgn && !profile.stats) throw usage_error("run_paired_mse: fading profile needs stats");
    if (!profile.awgn && profile.stats->max_delay() > cfg.cp_len)
        throw usage_error("run_paired_mse: cyclic prefix shorter than maximum channel delay");
    std::vector<ReceiverBundle> bundles;
    bundles.reserve(specs.size());
    for (const auto& spec : specs) bundles.push_back(prepare_bundle(cfg, spec, profile));

    const double sigma = std::sqrt(std::pow(10.0, -snr_db / 10.0));
    const int bps = bits_per_symbol(cfg.constellation);
    std::vector<std::vector<double>> block_mse(specs.size(), std::vector<double>(blocks, 0.0));
    std::string fail_msg;

    #pragma omp parallel for schedule(static)
    for (int blk = 0; blk < blocks; ++blk) {
        try {
            Rng rng(derive_seed(master_seed, 0, static_cast<uint64_t>(blk)));
            std::vector<uint8_t> bits(static_cast<size_t>(cfg.N) * bps);
            for (auto& b : bits) b = rng.bit();
            SymbolGrid d = map_bits(bits, cfg);
            TimeSignal tx = modulate(d, bundles[0].G, cfg);
            ChannelRealization h =
                profile.awgn ? ideal_channel(cfg) : realize_channel(*profile.stats, rng, cfg);
            TimeSignal rx = apply_channel(tx, h, sigma, rng, cfg);
            cvec gains = subcarrier_gains(h, cfg);
            for (size_t s = 0; s < specs.size(); ++s) {
                SymbolGrid soft = run_receiver(specs[s], bundles[s], rx, h, cfg);
                double acc = 0.0;
                for (int k = 0; k < cfg.K; ++k)
                    for (int m = 0; m < cfg.M; ++m)
                        acc += std::norm(soft.at(k, m) - gains[k] * d.at(k, m));
                block_mse[s][blk] = acc / cfg.N;
            }
        } catch (const std::exception& e) {
            #pragma omp critical
            if (fail_msg.empty()) fail_msg = e.what();
        }
    }
    if (!fail_msg.empty()) throw numerical_error("run_paired_mse: " + fail_msg);

    std::vector<double> mse(specs.size(), 0.0);
    for (size_t s = 0; s < specs.size(); ++s) {
        for (int blk = 0; blk < blocks; ++blk) mse[s] += block_mse[s][blk];
        mse[s] /= blocks;
    }
    return mse;
}

}  // namespace gfdm
