#pragma once

#include <vector>

#include "qsdc/density.hpp"

// Test-only eigensolver, independent of the library's Jacobi route:
// Householder tridiagonalization followed by Sturm-sequence bisection on the
// real symmetric embedding of the Hermitian input.
namespace spectral_oracle {

std::vector<double> hermitian_eigenvalues(const qsdc::DensityMatrix& m);

/// -sum lambda log2 lambda with the same 1e-12 floor as the library.
double entropy_bits(const qsdc::DensityMatrix& rho);

} // namespace spectral_oracle
