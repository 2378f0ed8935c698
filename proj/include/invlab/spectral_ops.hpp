#pragma once

#include "invlab/fft.hpp"

namespace invlab {

/// d^order/d(axis)^order by spectral multiplication with (i*k)^order.
/// axis is 1 (x) or 2 (y). Input in either representation; result spectral.
/// Odd orders zero the Nyquist mode (its derivative sign is undefined).
ScalarField spectral_derivative(const ScalarField& f, int axis, int order);

/// 2/3-rule truncation: modes with |kx| > nx/3 or |ky| > ny/3 are zeroed.
ScalarField dealias(const ScalarField& f);

struct StreamfunctionResult {
    ScalarField psi;           ///< zero-mean solution of Delta psi = omega
    double mean_removed = 0.0; ///< mean of omega projected out before solving
    bool mean_warning = false; ///< set when |mean| > 1e-10 * ||omega||_2
};

/// Solve Delta psi = omega spectrally (omega's mean is projected out and
/// reported; result has zero mean).
StreamfunctionResult solve_streamfunction(const ScalarField& omega);

/// u = grad_perp psi = (-d2 psi, d1 psi) from vorticity; divergence-free.
VectorField velocity_from_vorticity(const ScalarField& omega);

/// omega = d1 u2 - d2 u1 (spectral curl).
ScalarField vorticity_from_velocity(const VectorField& u);

/// Dealiased advective form u1 d1 omega + u2 d2 omega (pseudospectral
/// product, 2/3-rule on inputs and output). Result spectral.
ScalarField nonlinear_term(const VectorField& u, const ScalarField& omega);

/// Conservative double-divergence form d1 d2 (u2^2 - u1^2) + (d1^2 - d2^2)(u1 u2),
/// with the same dealiasing treatment; agrees with nonlinear_term for
/// band-limited divergence-free input.
ScalarField nonlinear_term_conservative(const VectorField& u);

/// Pointwise product computed through the padded exact route: both factors
/// are transformed, multiplied physically, and the result truncated to the
/// requested grid's resolvable band via a 3/2-padded transform. Used as the
/// dealiasing oracle in tests and by exact filtering of products.
ScalarField exact_truncated_product(const ScalarField& a, const ScalarField& b);

/// Spectral arithmetic helpers.
ScalarField add(const ScalarField& a, const ScalarField& b);
ScalarField subtract(const ScalarField& a, const ScalarField& b);
ScalarField scale(const ScalarField& a, double s);

/// Translate a periodic field by (sx, sy): result(x) = f(x - (sx, sy)),
/// evaluated exactly for the trigonometric interpolant (phase shift).
ScalarField translate(const ScalarField& f, double sx, double sy);

double max_abs(const ScalarField& f);         ///< max |f| (physical evaluation)
double mean(const ScalarField& f);
double l2_norm(const ScalarField& f);         ///< sqrt(int f^2 dx)

/// int f dx, int f^2 dx, int f g dx by the trapezoidal rule on the uniform
/// periodic grid (spectrally exact for band-limited integrands).
double integral(const ScalarField& f);
double inner(const ScalarField& f, const ScalarField& g);

/// Spectral divergence max |d1 u1 + d2 u2| (physical max of the spectral
/// evaluation).
double max_divergence(const VectorField& u);

}  // namespace invlab
