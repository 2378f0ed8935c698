#include "invlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace invlab {

namespace {

// FFTW_ESTIMATE keeps plans deterministic across processes (FFTW_MEASURE is
// timing-dependent and would break the byte-identical rerun contract).
// FFTW_UNALIGNED lets the new-array execute functions accept vector storage.
constexpr unsigned kFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

struct Plans2d {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

class PlanCache {
public:
    Plans2d& get2d(int nx, int ny) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(nx, ny);
        auto it = plans2d_.find(key);
        if (it != plans2d_.end()) return it->second;

        std::vector<double> re(static_cast<std::size_t>(nx) * ny);
        std::vector<fftw_complex> sp(static_cast<std::size_t>(nx) * (ny / 2 + 1));
        Plans2d p;
        p.fwd = fftw_plan_dft_r2c_2d(nx, ny, re.data(), sp.data(), kFlags);
        p.bwd = fftw_plan_dft_c2r_2d(nx, ny, sp.data(), re.data(), kFlags);
        return plans2d_.emplace(key, p).first->second;
    }

    Plans2d& get1dRows(int n, int rows) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, rows);
        auto it = plans1d_.find(key);
        if (it != plans1d_.end()) return it->second;

        std::vector<double> re(static_cast<std::size_t>(n) * rows);
        std::vector<fftw_complex> sp(static_cast<std::size_t>(n / 2 + 1) * rows);
        int nn[1] = {n};
        Plans2d p;
        p.fwd = fftw_plan_many_dft_r2c(1, nn, rows, re.data(), nullptr, 1, n, sp.data(),
                                       nullptr, 1, n / 2 + 1, kFlags);
        p.bwd = fftw_plan_many_dft_c2r(1, nn, rows, sp.data(), nullptr, 1, n / 2 + 1,
                                       re.data(), nullptr, 1, n, kFlags);
        return plans1d_.emplace(key, p).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, Plans2d> plans2d_;
    std::map<std::pair<int, int>, Plans2d> plans1d_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

ScalarField to_spectral(const ScalarField& f) {
    if (!f.is_physical())
        throw std::logic_error("to_spectral: field already spectral");
    const Grid& g = f.grid();
    Plans2d& p = cache().get2d(g.nx, g.ny);

    std::vector<double> in = f.values();  // r2c may scribble on its input
    std::vector<std::complex<double>> out(g.spectral_size());
    fftw_execute_dft_r2c(p.fwd, in.data(), reinterpret_cast<fftw_complex*>(out.data()));

    const double norm = 1.0 / static_cast<double>(g.size());
    for (auto& c : out) c *= norm;
    return ScalarField::from_spectral(g, std::move(out));
}

ScalarField to_physical(const ScalarField& f) {
    if (!f.is_spectral())
        throw std::logic_error("to_physical: field already physical");
    const Grid& g = f.grid();
    Plans2d& p = cache().get2d(g.nx, g.ny);

    std::vector<std::complex<double>> in = f.coeffs();  // c2r destroys input
    std::vector<double> out(g.size());
    fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(in.data()), out.data());
    return ScalarField::from_physical(g, std::move(out));
}

ScalarField as_spectral(const ScalarField& f) {
    return f.is_spectral() ? f : to_spectral(f);
}

ScalarField as_physical(const ScalarField& f) {
    return f.is_physical() ? f : to_physical(f);
}

namespace fftdetail {

void rfft_rows(int n, int rows, const double* in, std::complex<double>* out) {
    Plans2d& p = cache().get1dRows(n, rows);
    std::vector<double> tmp(in, in + static_cast<std::size_t>(n) * rows);
    fftw_execute_dft_r2c(p.fwd, tmp.data(), reinterpret_cast<fftw_complex*>(out));
    const double norm = 1.0 / n;
    for (std::size_t k = 0; k < static_cast<std::size_t>(n / 2 + 1) * rows; ++k) out[k] *= norm;
}

void irfft_rows(int n, int rows, const std::complex<double>* in, double* out) {
    Plans2d& p = cache().get1dRows(n, rows);
    std::vector<std::complex<double>> tmp(in, in + static_cast<std::size_t>(n / 2 + 1) * rows);
    fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(tmp.data()), out);
}

}  // namespace fftdetail

}  // namespace invlab
