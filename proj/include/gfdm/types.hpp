#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfdm {

using cdouble = std::complex<double>;
using cvec = std::vector<cdouble>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr cdouble j1c{0.0, 1.0};

// Invalid parameters, malformed files, bad flag combinations.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Singular or unacceptably ill-conditioned linear system.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg, double condition = 0.0)
        : std::runtime_error(msg), condition_(condition) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// v mod n mapped into [0, n).
inline int mod_n(long long v, int n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline cdouble cis(double phase) { return {std::cos(phase), std::sin(phase)}; }

// K x M complex data array; k indexes subcarriers, m subsymbols.
struct SymbolGrid {
    int K = 0;
    int M = 0;
    cvec values;  // k-major: values[k*M + m]

    SymbolGrid() = default;
    SymbolGrid(int K_, int M_) : K(K_), M(M_), values(static_cast<size_t>(K_) * M_) {}

    cdouble& at(int k, int m) { return values[static_cast<size_t>(k) * M + m]; }
    const cdouble& at(int k, int m) const { return values[static_cast<size_t>(k) * M + m]; }
    int size() const { return K * M; }
};

// Length-N frequency bins, unnormalized-forward-DFT convention.
struct Spectrum {
    cvec bins;
};

// Block (length N) or framed (length N + cp_len) baseband samples.
struct TimeSignal {
    cvec samples;
    double sample_interval_s = 0.0;
};

}  // namespace gfdm
