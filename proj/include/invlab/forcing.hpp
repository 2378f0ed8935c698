#pragma once

#include <memory>
#include <optional>
#include <string>

#include "invlab/field.hpp"

namespace invlab {

/// Time-constant body force. Kolmogorov forcing f = (a sin(k y), 0) is a
/// Stokes-operator eigenfunction with eigenvalue lambda = k^2 and vorticity
/// source g = curl f = -a k cos(k y); it admits the closed-form solutions
/// u(t) = y(t) f used as validation oracles throughout.
class ForcingSpec {
public:
    enum class Kind { none, kolmogorov, custom };

    static ForcingSpec none();
    static ForcingSpec kolmogorov(int k, double amplitude);
    /// Custom forcing given as a velocity field (vorticity source derived
    /// spectrally, so momentum and vorticity formulations stay consistent).
    static ForcingSpec custom(const VectorField& f);

    Kind kind() const { return kind_; }
    int k() const { return k_; }
    double amplitude() const { return amplitude_; }
    /// Stokes eigenvalue (k^2 for Kolmogorov; 0 otherwise).
    double lambda() const { return lambda_; }
    std::string id() const;

    /// Velocity-form forcing sampled on the grid.
    VectorField velocity(const Grid& g) const;
    /// Vorticity source g = curl f, spectral representation.
    ScalarField vorticity_source(const Grid& g) const;

private:
    Kind kind_ = Kind::none;
    int k_ = 0;
    double amplitude_ = 0.0;
    double lambda_ = 0.0;
    std::shared_ptr<const VectorField> custom_;
};

/// The paper's coefficient y(t) solving y' = -nu*lambda*y + 1:
/// y(t) = y0 e^{-nu lambda t} + (1 - e^{-nu lambda t})/(nu lambda),
/// evaluated with expm1 so the nu*lambda*t -> 0 branch is stable;
/// nu = 0 returns y0 + t exactly.
double exact_kolmogorov_coefficient(double t, double nu, double lambda, double y0);

/// d/dt of the coefficient: 1 - nu*lambda*y(t).
double exact_kolmogorov_coefficient_dt(double t, double nu, double lambda, double y0);

/// Vorticity of the exact solution u(t) = y(t) f on the grid:
/// omega = -y(t) a k cos(k y). Returned spectral.
ScalarField exact_kolmogorov_vorticity(double t, double nu, int k, double a, double y0,
                                       const Grid& g);

}  // namespace invlab
