#include "invlab/forcing.hpp"

#include <cmath>
#include <stdexcept>

#include "invlab/spectral_ops.hpp"

namespace invlab {

ForcingSpec ForcingSpec::none() { return ForcingSpec{}; }

ForcingSpec ForcingSpec::kolmogorov(int k, double amplitude) {
    if (k < 1)
        throw std::invalid_argument("kolmogorov forcing: k must be >= 1 (k=0 is not zero-mean)");
    ForcingSpec f;
    f.kind_ = Kind::kolmogorov;
    f.k_ = k;
    f.amplitude_ = amplitude;
    f.lambda_ = static_cast<double>(k) * k;
    return f;
}

ForcingSpec ForcingSpec::custom(const VectorField& field) {
    ForcingSpec f;
    f.kind_ = Kind::custom;
    f.custom_ = std::make_shared<VectorField>(field);
    return f;
}

std::string ForcingSpec::id() const {
    switch (kind_) {
        case Kind::none: return "none";
        case Kind::kolmogorov:
            return "kolmogorov(k=" + std::to_string(k_) + ",a=" + std::to_string(amplitude_) + ")";
        case Kind::custom: return "custom";
    }
    return "?";
}

VectorField ForcingSpec::velocity(const Grid& g) const {
    switch (kind_) {
        case Kind::none: {
            VectorField v;
            v.u1 = ScalarField::zeros(g);
            v.u2 = ScalarField::zeros(g);
            v.divergence_free = true;
            return v;
        }
        case Kind::kolmogorov: {
            VectorField v;
            const double a = amplitude_;
            const int k = k_;
            v.u1 = ScalarField::sample(g, [a, k](double, double y) { return a * std::sin(k * y); });
            v.u2 = ScalarField::zeros(g);
            v.divergence_free = true;
            return v;
        }
        case Kind::custom: return *custom_;
    }
    throw std::logic_error("ForcingSpec: bad kind");
}

ScalarField ForcingSpec::vorticity_source(const Grid& g) const {
    if (kind_ == Kind::none)
        return ScalarField::zeros(g, Representation::spectral);
    return vorticity_from_velocity(velocity(g));
}

double exact_kolmogorov_coefficient(double t, double nu, double lambda, double y0) {
    if (lambda <= 0.0) throw std::invalid_argument("exact_kolmogorov_coefficient: lambda > 0");
    if (t < 0.0) throw std::invalid_argument("exact_kolmogorov_coefficient: t >= 0");
    const double z = nu * lambda * t;
    if (z == 0.0) return y0 + t;
    // y = y0 e^{-z} + (1 - e^{-z})/(nu lambda); -expm1(-z) = 1 - e^{-z}
    return y0 * std::exp(-z) + (-std::expm1(-z)) / (nu * lambda);
}

double exact_kolmogorov_coefficient_dt(double t, double nu, double lambda, double y0) {
    return 1.0 - nu * lambda * exact_kolmogorov_coefficient(t, nu, lambda, y0);
}

ScalarField exact_kolmogorov_vorticity(double t, double nu, int k, double a, double y0,
                                       const Grid& g) {
    const double y = exact_kolmogorov_coefficient(t, nu, static_cast<double>(k) * k, y0);
    ScalarField w = ScalarField::sample(
        g, [y, a, k](double, double yy) { return -y * a * k * std::cos(k * yy); });
    return to_spectral(w);
}

}  // namespace invlab
