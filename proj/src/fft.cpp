#include "gfdm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace gfdm::fft {

namespace {

// Plan cache keyed by transform size. Plans are created with FFTW_UNALIGNED so
// fftw_execute_dft may run on arbitrary caller buffers; execution itself is
// thread-safe, only planning is serialized.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
        fftw_complex* buf2 = fftw_alloc_complex(static_cast<size_t>(n));
        fftw_plan p = fftw_plan_dft_1d(n, buf, buf2, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        fftw_free(buf2);
        plans_[key] = p;
        return p;
    }

    ~PlanCache() {
        for (auto& [key, p] : plans_) fftw_destroy_plan(p);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

void run(const cvec& in, cvec& out, int sign) {
    const int n = static_cast<int>(in.size());
    if (n == 0) {
        out.clear();
        return;
    }
    if (&in == &out) {
        cvec tmp = in;
        run(tmp, out, sign);
        return;
    }
    out.resize(in.size());
    fftw_plan p = PlanCache::instance().get(n, sign);
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void forward(const cvec& in, cvec& out) { run(in, out, FFTW_FORWARD); }

void inverse(const cvec& in, cvec& out) {
    run(in, out, FFTW_BACKWARD);
    const double scale = in.empty() ? 1.0 : 1.0 / static_cast<double>(in.size());
    for (auto& v : out) v *= scale;
}

cvec forward(const cvec& in) {
    cvec out;
    forward(in, out);
    return out;
}

cvec inverse(const cvec& in) {
    cvec out;
    inverse(in, out);
    return out;
}

}  // namespace gfdm::fft
