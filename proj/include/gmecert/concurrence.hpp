#pragma once

#include <span>
#include <vector>

#include "gmecert/matrix.hpp"
#include "gmecert/shape.hpp"
#include "gmecert/states.hpp"

namespace gmecert {

// Tr(rho_subset^2) of a pure state, straight from the amplitude vector
// reshaped across subset|complement (no full density matrix is formed).
double reduced_purity(const KetVector& psi, const SubsetMask& subset);

// Multipartite concurrence of a pure state:
//   2^{1-N/2} sqrt( (2^N - 2) - sum_subsets Tr(rho_subset^2) ),
// the sum running over all 2^N - 2 nonempty proper subsets, so each
// bipartition is counted twice.
double pure_concurrence(const KetVector& psi);

// Bipartite concurrence of a pure state across cut|complement:
//   sqrt( 2 (1 - Tr(rho_cut^2)) ).
double pure_bipartite_concurrence(const KetVector& psi, const SubsetMask& cut);

struct ThresholdValue {
    int n = 0;
    int d = 0;
    double value = 0.0;
    bool even_branch = false;
};

// GME certification threshold for n subsystems of equal local dimension d:
// any state whose concurrence exceeds this value is genuinely multipartite
// entangled. For n = 3 the expression simplifies to sqrt(2 - 2/d).
ThresholdValue gme_threshold(int n, int d);

// The d^2 - 1 traceless Hermitian generators of SU(d), normalized to
// Tr(g_a g_b) = 2 delta_ab. Order: symmetric pairs (row-major), then
// antisymmetric pairs, then the d-1 diagonal generators.
struct GellMannBasis {
    int d = 0;
    std::vector<ComplexMatrix> generators;
};

GellMannBasis gell_mann_basis(int d);

// Real coefficients of the Bloch expansion of rho restricted to `subset`:
//   T_{a1..aM} = (d/2)^M Tr[ rho g_{a1}^{(p1)} ... g_{aM}^{(pM)} ],
// one axis of length d^2 - 1 per subsystem in the subset (row-major layout).
class CorrelationTensor {
public:
    CorrelationTensor(SubsetMask subset, int local_dim, std::vector<double> entries);

    const SubsetMask& subset() const { return subset_; }
    int local_dim() const { return local_dim_; }
    int axis_length() const { return local_dim_ * local_dim_ - 1; }
    const std::vector<double>& entries() const { return entries_; }

    double entry(std::span<const int> alphas) const;
    double norm_sq() const;   // squared Euclidean norm over all entries

private:
    SubsetMask subset_;
    int local_dim_;
    std::vector<double> entries_;
};

// Requires homogeneous local dimensions. The subset may be the full system.
CorrelationTensor correlation_tensor(const DensityMatrix& rho, const SubsetMask& subset);

// Tr(rho_subset^2) recomputed from correlation-tensor norms:
//   d^{-M} ( 1 + sum_{nonempty S within subset} (2/d)^{|S|} ||T^S||^2 ).
// Must agree with purity(partial_trace(rho, subset)).
double purity_via_tensors(const DensityMatrix& rho, const SubsetMask& subset);

} // namespace gmecert
