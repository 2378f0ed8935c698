#pragma once

#include "invlab/field.hpp"

namespace invlab {

/// Exact discrete transform pair. Forward normalizes by 1/(nx*ny) so the
/// zero mode equals the field mean. Plans are cached per grid size behind an
/// internal lock; execution is concurrency-safe (new-array interface).
ScalarField to_spectral(const ScalarField& f);
ScalarField to_physical(const ScalarField& f);

/// Convenience: return f in the requested representation (no-op if already there).
ScalarField as_spectral(const ScalarField& f);
ScalarField as_physical(const ScalarField& f);

namespace fftdetail {
/// Raw 1D batched r2c/c2r along x for channel fields: `rows` transforms of
/// length n, each row contiguous. Forward normalizes by 1/n.
void rfft_rows(int n, int rows, const double* in, std::complex<double>* out);
void irfft_rows(int n, int rows, const std::complex<double>* in, double* out);
}  // namespace fftdetail

}  // namespace invlab
