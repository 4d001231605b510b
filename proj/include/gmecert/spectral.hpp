#pragma once

#include <vector>

#include "gmecert/matrix.hpp"

namespace gmecert {

struct EigenSystem {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // column k belongs to values[k]
};

// Eigenvalues of a Hermitian matrix, ascending. The input must be Hermitian
// within 1e-10 (max-abs deviation of h - h^dagger); cyclic Jacobi rotations,
// sweep cap tunable via GME_EIG_SWEEP_CAP (default 60).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

EigenSystem hermitian_eigensystem(const ComplexMatrix& h);

// Singular values, descending; square roots of the Gram-matrix spectrum
// computed on the smaller side of m.
std::vector<double> singular_values(const ComplexMatrix& m);

// Sum of singular values. Hermitian inputs take the cheaper eigenvalue path.
double trace_norm(const ComplexMatrix& m);

// Tr(rho^2) as a real number; complex residue above 1e-9 is a contract error.
double purity(const ComplexMatrix& rho);

} // namespace gmecert
