#pragma once

#include <cstddef>
#include <stdexcept>

namespace invlab {

/// Uniform periodic rectangular grid (torus). Node (i, j) sits at
/// (i*dx, j*dy); values are stored row-major with j (the y index) fastest.
struct Grid {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;

    Grid() = default;
    Grid(int nx_, int ny_, double lx_ = two_pi(), double ly_ = two_pi())
        : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
        if (nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0)
            throw std::invalid_argument("Grid: nx, ny must be even and >= 8");
        if (lx <= 0.0 || ly <= 0.0)
            throw std::invalid_argument("Grid: domain lengths must be positive");
    }

    static constexpr double two_pi() { return 6.283185307179586476925286766559; }

    double dx() const { return lx / nx; }
    double dy() const { return ly / ny; }
    double x(int i) const { return i * dx(); }
    double y(int j) const { return j * dy(); }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * ny + j; }

    /// Number of complex entries in the Hermitian half-spectrum.
    std::size_t spectral_size() const { return static_cast<std::size_t>(nx) * (ny / 2 + 1); }
    int nky() const { return ny / 2 + 1; }

    /// Signed integer wavenumber index for row i: 0..nx/2, then negative.
    int kx_index(int i) const { return (i <= nx / 2) ? i : i - nx; }
    /// Physical wavenumbers (2*pi/l times the integer index).
    double kx(int i) const { return two_pi() / lx * kx_index(i); }
    double ky(int j) const { return two_pi() / ly * j; }

    bool operator==(const Grid& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }
};

}  // namespace invlab
