#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invlab/field.hpp"
#include "invlab/forcing.hpp"

namespace invlab {

/// phi-functions of exponential integrators, phi_m(z) = (e^z - sum_{n<m} z^n/n!)/z^m,
/// evaluated with a Taylor switch at small |z| (tolerance ~1e-14, real z <= 0).
double etd_phi1(double z);
double etd_phi2(double z);
double etd_phi3(double z);

/// Unit of time stepping: zero-mean spectral vorticity plus run parameters.
struct State {
    ScalarField omega;  ///< spectral representation, zero mean
    double t = 0.0;
    double nu = 0.0;
    std::shared_ptr<const ForcingSpec> forcing;

    const Grid& grid() const { return omega.grid(); }
};

State make_state(ScalarField omega, double t, double nu, ForcingSpec forcing);

struct StepperOptions {
    double cfl = 0.5;
    double u_floor = 1e-8;
    double dt_max = 0.1;
    std::optional<double> fixed_dt;       ///< bypass CFL adaptivity when set
    bool enforce_cfl = true;
    double blowup_threshold = 1e8;        ///< on max |omega|
};

/// CFL-limited step size: cfl * min(dx,dy) / max(||u||_inf, u_floor),
/// capped at dt_max.
double cfl_dt(const State& s, const StepperOptions& opt = {});

struct BlowUpInfo {
    double t = 0.0;       ///< time of the last valid state
    std::string reason;
};

/// Thrown by step() when the result is non-finite or exceeds the blow-up
/// threshold; carries the last valid state.
struct BlowUpError {
    State last_valid;
    BlowUpInfo info;
};

/// One ETDRK4 step (Cox-Matthews): exact exponential treatment of the
/// -nu |k|^2 term with classical RK4 nonlinear stages; nu = 0 reduces to
/// plain RK4. The returned state has zero-mean vorticity.
State step(const State& s, double dt, const StepperOptions& opt = {});

enum class SnapshotPolicy { memory, disk, none };

struct TrajectoryOptions {
    SnapshotPolicy policy = SnapshotPolicy::memory;
    std::string spill_dir;  ///< for SnapshotPolicy::disk
};

/// Cadence-sampled solution of one run. Snapshots (spectral vorticity) are
/// held per the persistence policy; times are always recorded.
class Trajectory {
public:
    struct Meta {
        double nu = 0.0;
        Grid grid;
        std::string forcing_id;
        std::string scheme = "etdrk4";
        std::vector<double> dt_history;
        std::size_t n_steps = 0;
    };

    std::vector<double> times;
    Meta meta;

    void configure(const TrajectoryOptions& opt, const State& prototype);
    void record(const State& s);
    std::size_t size() const { return times.size(); }
    bool has_snapshots() const { return policy_ != SnapshotPolicy::none; }

    /// State at cadence index (loads from disk under the disk policy).
    State state_at(std::size_t i) const;

private:
    SnapshotPolicy policy_ = SnapshotPolicy::memory;
    std::string spill_dir_;
    std::shared_ptr<const ForcingSpec> forcing_;
    double nu_ = 0.0;
    std::vector<ScalarField> snaps_;
    std::vector<std::string> paths_;
};

/// Called at every cadence point (including t0 and t_end) with the cadence
/// index. Never invoked concurrently within one run.
using Sink = std::function<void(const State&, std::size_t)>;

struct RunResult {
    Trajectory trajectory;
    std::optional<BlowUpInfo> blow_up;  ///< set when the run ended early
};

/// Integrate from s0 to t_end with adaptive dt <= cfl_dt, landing exactly on
/// every cadence point (the final substep is shrunk, never interpolated).
RunResult run(const State& s0, double t_end, double cadence,
              const std::vector<Sink>& sinks = {}, const StepperOptions& opt = {},
              const TrajectoryOptions& traj_opt = {});

}  // namespace invlab
