#include "invlab/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "invlab/snapshot.hpp"
#include "invlab/spectral_ops.hpp"

namespace invlab {

namespace {

// Taylor switch radius; below it the direct formulas lose digits to
// cancellation, above it expm1-based evaluation is accurate.
constexpr double kPhiSwitch = 1.0;
constexpr int kPhiTerms = 22;

double phi_taylor(double z, int m) {
    // phi_m(z) = sum_{n>=0} z^n / (n+m)!
    double inv_fact = 1.0;
    for (int k = 2; k <= m; ++k) inv_fact /= k;
    double term = inv_fact;  // n = 0 term = 1/m!
    double sum = term;
    for (int n = 1; n < kPhiTerms; ++n) {
        term *= z / (n + m);
        sum += term;
    }
    return sum;
}

}  // namespace

double etd_phi1(double z) {
    if (std::abs(z) < kPhiSwitch) return phi_taylor(z, 1);
    return std::expm1(z) / z;
}

double etd_phi2(double z) {
    if (std::abs(z) < kPhiSwitch) return phi_taylor(z, 2);
    return (std::expm1(z) - z) / (z * z);
}

double etd_phi3(double z) {
    if (std::abs(z) < kPhiSwitch) return phi_taylor(z, 3);
    return (std::expm1(z) - z - 0.5 * z * z) / (z * z * z);
}

State make_state(ScalarField omega, double t, double nu, ForcingSpec forcing) {
    if (nu < 0.0) throw std::invalid_argument("State: nu must be >= 0");
    State s;
    s.omega = as_spectral(omega);
    s.omega.coeffs()[0] = 0.0;  // zero-mean invariant
    s.t = t;
    s.nu = nu;
    s.forcing = std::make_shared<ForcingSpec>(std::move(forcing));
    return s;
}

double cfl_dt(const State& s, const StepperOptions& opt) {
    VectorField u = velocity_from_vorticity(s.omega);
    const double umax = std::max(max_abs(u.u1), max_abs(u.u2));
    const Grid& g = s.grid();
    const double h = std::min(g.dx(), g.dy());
    return std::min(opt.dt_max, opt.cfl * h / std::max(umax, opt.u_floor));
}

namespace {

/// Per-(grid, nu, dt) ETDRK4 multiplier tables (Cox-Matthews coefficients
/// evaluated on the diagonal linear operator L_k = -nu |k|^2).
struct Etdrk4Tables {
    double dt = -1.0;
    std::vector<double> E, E2, Q, f1, f2, f3;

    void build(const Grid& g, double nu, double h) {
        dt = h;
        const std::size_t n = g.spectral_size();
        E.resize(n); E2.resize(n); Q.resize(n);
        f1.resize(n); f2.resize(n); f3.resize(n);
        for (int i = 0; i < g.nx; ++i) {
            const double kx = g.kx(i);
            for (int j = 0; j < g.nky(); ++j) {
                const double ky = g.ky(j);
                const double z = -nu * (kx * kx + ky * ky) * h;
                const std::size_t idx = static_cast<std::size_t>(i) * g.nky() + j;
                E[idx] = std::exp(z);
                E2[idx] = std::exp(0.5 * z);
                Q[idx] = 0.5 * h * etd_phi1(0.5 * z);
                const double p1 = etd_phi1(z), p2 = etd_phi2(z), p3 = etd_phi3(z);
                f1[idx] = h * (p1 - 3.0 * p2 + 4.0 * p3);
                f2[idx] = h * (2.0 * p2 - 4.0 * p3);
                f3[idx] = h * (4.0 * p3 - p2);
            }
        }
    }
};

using cd = std::complex<double>;

/// N(omega) = g_hat - dealias(u . grad omega), all spectral.
ScalarField eval_nonlinear(const ScalarField& omega_spec, const ScalarField& g_spec) {
    VectorField u = velocity_from_vorticity(omega_spec);
    ScalarField adv = nonlinear_term(u, omega_spec);
    ScalarField n = subtract(g_spec, adv);
    n.coeffs()[0] = 0.0;
    return n;
}

void axpy(std::vector<cd>& out, const std::vector<double>& diag, const std::vector<cd>& v) {
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += diag[n] * v[n];
}

std::vector<cd> dmul(const std::vector<double>& diag, const std::vector<cd>& v) {
    std::vector<cd> out(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) out[n] = diag[n] * v[n];
    return out;
}

State etdrk4_step(const State& s, double dt, const Etdrk4Tables& tb,
                  const ScalarField& g_spec, const StepperOptions& opt) {
    const Grid& g = s.grid();
    const auto& w = s.omega.coeffs();

    ScalarField n0 = eval_nonlinear(s.omega, g_spec);
    std::vector<cd> a = dmul(tb.E2, w);
    axpy(a, tb.Q, n0.coeffs());
    ScalarField af = ScalarField::from_spectral(g, std::move(a));

    ScalarField na = eval_nonlinear(af, g_spec);
    std::vector<cd> b = dmul(tb.E2, w);
    axpy(b, tb.Q, na.coeffs());
    ScalarField bf = ScalarField::from_spectral(g, std::move(b));

    ScalarField nb = eval_nonlinear(bf, g_spec);
    std::vector<cd> c = dmul(tb.E2, af.coeffs());
    std::vector<cd> two_nb_minus_n0(nb.coeffs());
    for (std::size_t n = 0; n < two_nb_minus_n0.size(); ++n)
        two_nb_minus_n0[n] = 2.0 * two_nb_minus_n0[n] - n0.coeffs()[n];
    axpy(c, tb.Q, two_nb_minus_n0);
    ScalarField cf = ScalarField::from_spectral(g, std::move(c));

    ScalarField nc = eval_nonlinear(cf, g_spec);

    std::vector<cd> out = dmul(tb.E, w);
    axpy(out, tb.f1, n0.coeffs());
    std::vector<cd> nab(na.coeffs());
    for (std::size_t n = 0; n < nab.size(); ++n) nab[n] += nb.coeffs()[n];
    axpy(out, tb.f2, nab);
    axpy(out, tb.f3, nc.coeffs());
    out[0] = 0.0;

    State next = s;
    next.omega = ScalarField::from_spectral(g, std::move(out));
    next.t = s.t + dt;

    const double wmax = max_abs(next.omega);
    if (!std::isfinite(wmax) || wmax > opt.blowup_threshold) {
        BlowUpError err;
        err.last_valid = s;
        err.info.t = s.t;
        err.info.reason = !std::isfinite(wmax) ? "non-finite vorticity"
                                               : "max |omega| exceeded blow-up threshold";
        throw err;
    }
    return next;
}

}  // namespace

State step(const State& s, double dt, const StepperOptions& opt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    if (opt.enforce_cfl && !opt.fixed_dt) {
        const double lim = cfl_dt(s, opt);
        if (dt > lim * (1.0 + 1e-12))
            throw std::invalid_argument("step: dt exceeds cfl_dt; pass fixed_dt or disable enforce_cfl");
    }
    Etdrk4Tables tb;
    tb.build(s.grid(), s.nu, dt);
    ScalarField g_spec = dealias(s.forcing ? s.forcing->vorticity_source(s.grid())
                                           : ScalarField::zeros(s.grid(), Representation::spectral));
    return etdrk4_step(s, dt, tb, g_spec, opt);
}

void Trajectory::configure(const TrajectoryOptions& opt, const State& prototype) {
    policy_ = opt.policy;
    spill_dir_ = opt.spill_dir;
    forcing_ = prototype.forcing;
    nu_ = prototype.nu;
    meta.nu = prototype.nu;
    meta.grid = prototype.grid();
    meta.forcing_id = prototype.forcing ? prototype.forcing->id() : "none";
}

void Trajectory::record(const State& s) {
    times.push_back(s.t);
    if (policy_ == SnapshotPolicy::memory) {
        snaps_.push_back(s.omega);
    } else if (policy_ == SnapshotPolicy::disk) {
        Snapshot snap;
        snap.kind = Snapshot::GridKind::torus;
        snap.nx = static_cast<std::uint32_t>(s.grid().nx);
        snap.ny = static_cast<std::uint32_t>(s.grid().ny);
        snap.lx = s.grid().lx;
        snap.ly = s.grid().ly;
        snap.nu = s.nu;
        snap.t = s.t;
        snap.fields.push_back({"omega", as_physical(s.omega).values()});
        std::string path = spill_dir_ + "/snap_" + std::to_string(times.size() - 1) + ".ivlb";
        save_snapshot(path, snap);
        paths_.push_back(path);
    }
}

State Trajectory::state_at(std::size_t i) const {
    State s;
    s.t = times.at(i);
    s.nu = nu_;
    s.forcing = forcing_;
    if (policy_ == SnapshotPolicy::memory) {
        s.omega = snaps_.at(i);
    } else if (policy_ == SnapshotPolicy::disk) {
        Snapshot snap = load_snapshot(paths_.at(i));
        Grid g(static_cast<int>(snap.nx), static_cast<int>(snap.ny), snap.lx, snap.ly);
        s.omega = to_spectral(ScalarField::from_physical(g, snap.fields.at(0).data));
    } else {
        throw std::logic_error("Trajectory: snapshots were not retained (policy none)");
    }
    return s;
}

RunResult run(const State& s0, double t_end, double cadence, const std::vector<Sink>& sinks,
              const StepperOptions& opt, const TrajectoryOptions& traj_opt) {
    if (t_end < s0.t) throw std::invalid_argument("run: t_end must be >= s0.t");
    if (!(cadence > 0.0)) throw std::invalid_argument("run: cadence must be positive");

    RunResult res;
    res.trajectory.configure(traj_opt, s0);
    res.trajectory.record(s0);
    for (const auto& sink : sinks) sink(s0, 0);
    if (t_end == s0.t) return res;

    Etdrk4Tables tables;
    ScalarField g_spec = dealias(s0.forcing ? s0.forcing->vorticity_source(s0.grid())
                                            : ScalarField::zeros(s0.grid(), Representation::spectral));

    State s = s0;
    std::size_t cadence_index = 0;
    const double t0 = s0.t;
    while (s.t < t_end - 1e-14 * std::max(1.0, std::abs(t_end))) {
        ++cadence_index;
        const double t_target = std::min(t_end, t0 + static_cast<double>(cadence_index) * cadence);
        while (s.t < t_target - 1e-14 * std::max(1.0, std::abs(t_target))) {
            double dt = opt.fixed_dt ? *opt.fixed_dt : cfl_dt(s, opt);
            dt = std::min(dt, t_target - s.t);
            if (tables.dt != dt) tables.build(s.grid(), s.nu, dt);
            try {
                s = etdrk4_step(s, dt, tables, g_spec, opt);
            } catch (const BlowUpError& e) {
                res.blow_up = e.info;
                return res;
            }
            res.trajectory.meta.dt_history.push_back(dt);
            ++res.trajectory.meta.n_steps;
        }
        s.t = t_target;  // absorb roundoff so cadence times are exact
        res.trajectory.record(s);
        for (const auto& sink : sinks) sink(s, cadence_index);
    }
    return res;
}

}  // namespace invlab
