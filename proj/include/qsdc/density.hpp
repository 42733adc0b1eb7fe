#pragma once

#include <cstddef>
#include <vector>

#include "qsdc/state.hpp"

namespace qsdc {

/// Square complex matrix, row-major. Used for density operators and for
/// generic small operators (unitaries) acting on them.
struct DensityMatrix {
    std::size_t dim = 0;
    std::vector<ComplexAmp> entries; // dim*dim, row-major

    static DensityMatrix zero(std::size_t dim);
    static DensityMatrix identity(std::size_t dim);
    /// |s><s|
    static DensityMatrix pure(const StateVector& s);

    ComplexAmp& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
    const ComplexAmp& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }

    ComplexAmp trace() const;
    /// max_ij |a_ij - conj(a_ji)|
    double hermiticity_error() const;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix scaled(const DensityMatrix& a, double w);
DensityMatrix sum(const DensityMatrix& a, const DensityMatrix& b);

/// U rho U^dagger for a dim x dim operator U given row-major.
DensityMatrix conjugate_by(const std::vector<ComplexAmp>& u, const DensityMatrix& rho);

/// Traces out the leading factor of dimension `lead_dim` (dim must divide).
DensityMatrix partial_trace_leading(const DensityMatrix& rho, std::size_t lead_dim);
/// Traces out the trailing factor of dimension `trail_dim`.
DensityMatrix partial_trace_trailing(const DensityMatrix& rho, std::size_t trail_dim);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi sweeps on the
/// real symmetric embedding [[Re, -Im], [Im, Re]]; off-diagonal residual is
/// driven below 1e-13 relative to the Frobenius norm.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& m);

/// -sum_i lambda_i log2 lambda_i over the spectrum, in bits; eigenvalues below
/// 1e-12 contribute nothing. Throws if the input is not Hermitian within 1e-12
/// or its trace differs from 1 by more than 1e-12.
double von_neumann_entropy(const DensityMatrix& rho);

/// Hermitian within tol_herm, trace 1 within tol_trace, spectrum >= eig_floor.
bool is_valid_density(const DensityMatrix& rho, double tol_herm = 1e-12,
                      double tol_trace = 1e-12, double eig_floor = -1e-10);

} // namespace qsdc
