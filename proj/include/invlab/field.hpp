#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "invlab/grid.hpp"

namespace invlab {

enum class Representation { physical, spectral };

/// Real scalar field on a periodic grid, held in exactly one representation.
/// Physical storage: nx*ny doubles, row-major (y fastest). Spectral storage:
/// the r2c half-spectrum, nx*(ny/2+1) complex coefficients normalized so the
/// (0,0) entry equals the field mean; Hermitian symmetry is structural.
/// Fields are immutable values in spirit: operations return new fields.
class ScalarField {
public:
    ScalarField() = default;

    static ScalarField zeros(const Grid& g, Representation r = Representation::physical) {
        ScalarField f;
        f.grid_ = g;
        f.repr_ = r;
        if (r == Representation::physical)
            f.phys_.assign(g.size(), 0.0);
        else
            f.spec_.assign(g.spectral_size(), {0.0, 0.0});
        return f;
    }

    static ScalarField from_physical(const Grid& g, std::vector<double> values) {
        if (values.size() != g.size())
            throw std::invalid_argument("ScalarField: physical size mismatch");
        ScalarField f;
        f.grid_ = g;
        f.repr_ = Representation::physical;
        f.phys_ = std::move(values);
        return f;
    }

    static ScalarField from_spectral(const Grid& g, std::vector<std::complex<double>> coeffs) {
        if (coeffs.size() != g.spectral_size())
            throw std::invalid_argument("ScalarField: spectral size mismatch");
        ScalarField f;
        f.grid_ = g;
        f.repr_ = Representation::spectral;
        f.spec_ = std::move(coeffs);
        return f;
    }

    /// Build from a pointwise function of (x, y).
    template <class F>
    static ScalarField sample(const Grid& g, F&& fn) {
        ScalarField f = zeros(g);
        for (int i = 0; i < g.nx; ++i)
            for (int j = 0; j < g.ny; ++j)
                f.phys_[g.idx(i, j)] = fn(g.x(i), g.y(j));
        return f;
    }

    const Grid& grid() const { return grid_; }
    Representation representation() const { return repr_; }
    bool is_physical() const { return repr_ == Representation::physical; }
    bool is_spectral() const { return repr_ == Representation::spectral; }

    const std::vector<double>& values() const {
        require(Representation::physical);
        return phys_;
    }
    std::vector<double>& values() {
        require(Representation::physical);
        return phys_;
    }
    const std::vector<std::complex<double>>& coeffs() const {
        require(Representation::spectral);
        return spec_;
    }
    std::vector<std::complex<double>>& coeffs() {
        require(Representation::spectral);
        return spec_;
    }

    double operator()(int i, int j) const {
        require(Representation::physical);
        return phys_[grid_.idx(i, j)];
    }

private:
    void require(Representation r) const {
        if (repr_ != r)
            throw std::logic_error("ScalarField: representation mismatch");
    }

    Grid grid_;
    Representation repr_ = Representation::physical;
    std::vector<double> phys_;
    std::vector<std::complex<double>> spec_;
};

/// Two-component velocity-like field.
struct VectorField {
    ScalarField u1;
    ScalarField u2;
    bool divergence_free = false;

    const Grid& grid() const { return u1.grid(); }
};

}  // namespace invlab
