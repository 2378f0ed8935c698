#include "invlab/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace invlab {

using cd = std::complex<double>;

ScalarField spectral_derivative(const ScalarField& f, int axis, int order) {
    if (axis != 1 && axis != 2)
        throw std::invalid_argument("spectral_derivative: axis must be 1 or 2");
    if (order < 1)
        throw std::invalid_argument("spectral_derivative: order must be positive");

    ScalarField s = as_spectral(f);
    const Grid& g = s.grid();
    auto& c = s.coeffs();
    const bool odd = (order % 2 != 0);
    // (i*k)^order = k^order * i^order; i^order cycles {1, i, -1, -i}
    static constexpr cd icycle[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    const cd iphase = icycle[order % 4];

    for (int i = 0; i < g.nx; ++i) {
        const double kx = g.kx(i);
        const bool x_nyquist = (i == g.nx / 2);
        for (int j = 0; j < g.nky(); ++j) {
            const double k = (axis == 1) ? kx : g.ky(j);
            cd m = (k == 0.0) ? cd(0.0) : iphase * std::pow(std::abs(k), order);
            if (k < 0.0 && odd) m = -m;
            if (odd && ((axis == 1 && x_nyquist) || (axis == 2 && j == g.ny / 2)))
                m = 0.0;
            c[static_cast<std::size_t>(i) * g.nky() + j] *= m;
        }
    }
    return s;
}

ScalarField dealias(const ScalarField& f) {
    ScalarField s = as_spectral(f);
    const Grid& g = s.grid();
    auto& c = s.coeffs();
    const double cut_x = g.nx / 3.0;
    const double cut_y = g.ny / 3.0;
    for (int i = 0; i < g.nx; ++i) {
        const bool kill_x = std::abs(g.kx_index(i)) > cut_x;
        for (int j = 0; j < g.nky(); ++j) {
            if (kill_x || j > cut_y)
                c[static_cast<std::size_t>(i) * g.nky() + j] = 0.0;
        }
    }
    return s;
}

StreamfunctionResult solve_streamfunction(const ScalarField& omega) {
    ScalarField s = as_spectral(omega);
    const Grid& g = s.grid();
    auto& c = s.coeffs();

    StreamfunctionResult res;
    res.mean_removed = c[0].real();
    c[0] = 0.0;

    double l2 = 0.0;  // ||omega||_2 from the half-spectrum (Parseval)
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.nky(); ++j) {
            const double w = (j == 0 || j == g.ny / 2) ? 1.0 : 2.0;
            l2 += w * std::norm(c[static_cast<std::size_t>(i) * g.nky() + j]);
        }
    l2 = std::sqrt(l2 * g.lx * g.ly);
    res.mean_warning = std::abs(res.mean_removed) > 1e-10 * std::max(l2, 1e-300);

    for (int i = 0; i < g.nx; ++i) {
        const double kx = g.kx(i);
        for (int j = 0; j < g.nky(); ++j) {
            const double k2 = kx * kx + g.ky(j) * g.ky(j);
            auto& v = c[static_cast<std::size_t>(i) * g.nky() + j];
            v = (k2 > 0.0) ? v / (-k2) : cd(0.0);
        }
    }
    res.psi = std::move(s);
    return res;
}

VectorField velocity_from_vorticity(const ScalarField& omega) {
    StreamfunctionResult sr = solve_streamfunction(omega);
    VectorField u;
    u.u1 = scale(spectral_derivative(sr.psi, 2, 1), -1.0);
    u.u2 = spectral_derivative(sr.psi, 1, 1);
    u.divergence_free = true;
    return u;
}

ScalarField vorticity_from_velocity(const VectorField& u) {
    ScalarField a = spectral_derivative(u.u2, 1, 1);
    ScalarField b = spectral_derivative(u.u1, 2, 1);
    return subtract(a, b);
}

ScalarField nonlinear_term(const VectorField& u, const ScalarField& omega) {
    const Grid& g = omega.grid();
    ScalarField ws = dealias(omega);
    ScalarField u1 = to_physical(dealias(u.u1));
    ScalarField u2 = to_physical(dealias(u.u2));
    ScalarField wx = to_physical(spectral_derivative(ws, 1, 1));
    ScalarField wy = to_physical(spectral_derivative(ws, 2, 1));

    std::vector<double> prod(g.size());
    const auto& a1 = u1.values();
    const auto& a2 = u2.values();
    const auto& dx = wx.values();
    const auto& dy = wy.values();
    for (std::size_t n = 0; n < g.size(); ++n)
        prod[n] = a1[n] * dx[n] + a2[n] * dy[n];
    return dealias(to_spectral(ScalarField::from_physical(g, std::move(prod))));
}

ScalarField nonlinear_term_conservative(const VectorField& u) {
    const Grid& g = u.grid();
    ScalarField u1 = to_physical(dealias(u.u1));
    ScalarField u2 = to_physical(dealias(u.u2));

    std::vector<double> a(g.size()), b(g.size());
    const auto& v1 = u1.values();
    const auto& v2 = u2.values();
    for (std::size_t n = 0; n < g.size(); ++n) {
        a[n] = v2[n] * v2[n] - v1[n] * v1[n];
        b[n] = v1[n] * v2[n];
    }
    ScalarField as = dealias(to_spectral(ScalarField::from_physical(g, std::move(a))));
    ScalarField bs = dealias(to_spectral(ScalarField::from_physical(g, std::move(b))));

    ScalarField t1 = spectral_derivative(spectral_derivative(as, 1, 1), 2, 1);
    ScalarField t2 = subtract(spectral_derivative(bs, 1, 2), spectral_derivative(bs, 2, 2));
    return add(t1, t2);
}

ScalarField exact_truncated_product(const ScalarField& a, const ScalarField& b) {
    const Grid& g = a.grid();
    if (!(b.grid() == g))
        throw std::invalid_argument("exact_truncated_product: grid mismatch");
    // pad both spectra onto a 2x grid, multiply there (alias-free for inputs
    // band-limited to N/2), then truncate back
    Grid gp(2 * g.nx, 2 * g.ny, g.lx, g.ly);
    auto pad = [&](const ScalarField& f) {
        ScalarField s = as_spectral(f);
        ScalarField out = ScalarField::zeros(gp, Representation::spectral);
        auto& oc = out.coeffs();
        const auto& ic = s.coeffs();
        for (int i = 0; i < g.nx; ++i) {
            const int ki = g.kx_index(i);
            const int ip = (ki >= 0) ? ki : ki + gp.nx;
            for (int j = 0; j < g.nky(); ++j)
                oc[static_cast<std::size_t>(ip) * gp.nky() + j] =
                    ic[static_cast<std::size_t>(i) * g.nky() + j];
        }
        return to_physical(out);
    };
    ScalarField pa = pad(a);
    ScalarField pb = pad(b);
    std::vector<double> prod(gp.size());
    for (std::size_t n = 0; n < gp.size(); ++n)
        prod[n] = pa.values()[n] * pb.values()[n];
    ScalarField ps = to_spectral(ScalarField::from_physical(gp, std::move(prod)));

    ScalarField out = ScalarField::zeros(g, Representation::spectral);
    auto& oc = out.coeffs();
    const auto& ic = ps.coeffs();
    for (int i = 0; i < g.nx; ++i) {
        const int ki = g.kx_index(i);
        const int ip = (ki >= 0) ? ki : ki + gp.nx;
        for (int j = 0; j < g.nky(); ++j)
            oc[static_cast<std::size_t>(i) * g.nky() + j] =
                ic[static_cast<std::size_t>(ip) * gp.nky() + j];
    }
    return out;
}

namespace {

template <class Op>
ScalarField combine(const ScalarField& a, const ScalarField& b, Op op) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument("field combine: grid mismatch");
    if (a.representation() != b.representation()) {
        return combine(as_spectral(a), as_spectral(b), op);
    }
    ScalarField out = a;
    if (a.is_physical()) {
        auto& v = out.values();
        const auto& w = b.values();
        for (std::size_t n = 0; n < v.size(); ++n) v[n] = op(v[n], w[n]);
    } else {
        auto& v = out.coeffs();
        const auto& w = b.coeffs();
        for (std::size_t n = 0; n < v.size(); ++n) v[n] = op(v[n], w[n]);
    }
    return out;
}

}  // namespace

ScalarField add(const ScalarField& a, const ScalarField& b) {
    return combine(a, b, [](auto x, auto y) { return x + y; });
}

ScalarField subtract(const ScalarField& a, const ScalarField& b) {
    return combine(a, b, [](auto x, auto y) { return x - y; });
}

ScalarField scale(const ScalarField& a, double s) {
    ScalarField out = a;
    if (out.is_physical())
        for (auto& v : out.values()) v *= s;
    else
        for (auto& v : out.coeffs()) v *= s;
    return out;
}

ScalarField translate(const ScalarField& f, double sx, double sy) {
    ScalarField s = as_spectral(f);
    const Grid& g = s.grid();
    auto& c = s.coeffs();
    for (int i = 0; i < g.nx; ++i) {
        const cd px = std::polar(1.0, -g.kx(i) * sx);
        for (int j = 0; j < g.nky(); ++j)
            c[static_cast<std::size_t>(i) * g.nky() + j] *= px * std::polar(1.0, -g.ky(j) * sy);
    }
    return s;
}

double max_abs(const ScalarField& f) {
    ScalarField p = as_physical(f);
    double m = 0.0;
    for (double v : p.values()) m = std::max(m, std::abs(v));
    return m;
}

double mean(const ScalarField& f) {
    if (f.is_spectral()) return f.coeffs()[0].real();
    double s = 0.0;
    for (double v : f.values()) s += v;
    return s / static_cast<double>(f.grid().size());
}

double integral(const ScalarField& f) {
    return mean(f) * f.grid().lx * f.grid().ly;
}

double inner(const ScalarField& f, const ScalarField& g) {
    ScalarField a = as_physical(f);
    ScalarField b = as_physical(g);
    double s = 0.0;
    const auto& va = a.values();
    const auto& vb = b.values();
    for (std::size_t n = 0; n < va.size(); ++n) s += va[n] * vb[n];
    return s * a.grid().dx() * a.grid().dy();
}

double l2_norm(const ScalarField& f) { return std::sqrt(std::max(0.0, inner(f, f))); }

double max_divergence(const VectorField& u) {
    ScalarField d = add(spectral_derivative(u.u1, 1, 1), spectral_derivative(u.u2, 2, 1));
    return max_abs(d);
}

}  // namespace invlab
