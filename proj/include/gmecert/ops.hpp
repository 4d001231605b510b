#pragma once

#include "gmecert/matrix.hpp"
#include "gmecert/shape.hpp"

namespace gmecert {

// Kronecker product. Fails with size_error when the result would exceed the
// configured dimension cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrix on the subsystems in `keep` (the complement is traced out).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const SystemShape& shape,
                            const SubsetMask& keep);

// Transposition of the tensor factors in `part`.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SystemShape& shape,
                                const SubsetMask& part);

// Realignment of a bipartite matrix: R(i*dA+j, k*dB+l) = rho(i*dB+k, j*dB+l).
// The result has dA^2 rows and dB^2 columns.
ComplexMatrix realign(const ComplexMatrix& rho, const SystemShape& bipartite_shape);

// Composite-index offsets of every multi-index over the digits at
// `positions` (ascending), all other digits zero. The offsets enumerate the
// sub-multi-indices in their own mixed-radix order.
std::vector<long long> subsystem_offsets(const SystemShape& shape,
                                         const std::vector<int>& positions);

struct BipartiteCut {
    ComplexMatrix matrix;   // same operator, basis reordered to (cut, complement)
    SystemShape shape;      // two subsystems: (dim_cut, dim_complement)
};

// Reorders the composite basis so the cut subsystems become the leading
// tensor factor, turning rho into an explicitly bipartite operator.
BipartiteCut as_bipartite(const ComplexMatrix& rho, const SystemShape& shape,
                          const SubsetMask& cut);

} // namespace gmecert
