#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmecert/matrix.hpp"
#include "gmecert/shape.hpp"

namespace gmecert {

// Pure state: unit-norm amplitude vector over a SystemShape.
class KetVector {
public:
    KetVector(SystemShape shape, std::vector<cplx> amplitudes);

    const SystemShape& shape() const { return shape_; }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    cplx amplitude(int index) const { return amplitudes_[index]; }
    double norm() const;

    ComplexMatrix projector() const;   // |psi><psi|

private:
    SystemShape shape_;
    std::vector<cplx> amplitudes_;
};

struct ValidationReport {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool finite_ok = false;
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool positive_ok = false;

    bool pass() const { return finite_ok && hermitian_ok && trace_ok && positive_ok; }
    // names the first violated invariant; empty when pass()
    std::string failure_message() const;
};

// Checks the density-matrix invariants: Hermitian within 1e-10, unit trace
// within 1e-10, smallest eigenvalue >= -1e-9.
ValidationReport validate(const ComplexMatrix& rho, const SystemShape& shape);

// Hermitian, positive-semidefinite, unit-trace operator over a SystemShape.
// Construction enforces the invariants (contract_error names the violation).
class DensityMatrix {
public:
    DensityMatrix(SystemShape shape, ComplexMatrix matrix);

    static DensityMatrix from_ket(const KetVector& psi);

    const SystemShape& shape() const { return shape_; }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    SystemShape shape_;
    ComplexMatrix matrix_;
};

// One-parameter white-noise family rho(x) = (x/D) I + (1-x) base, x in [0,1].
class NoisyFamily {
public:
    NoisyFamily(DensityMatrix base, std::string parameter = "x",
                std::string label = "white-noise");

    const DensityMatrix& base() const { return base_; }
    const std::string& parameter() const { return parameter_; }
    const std::string& label() const { return label_; }
    const SystemShape& shape() const { return base_.shape(); }

    DensityMatrix member(double x) const;

private:
    DensityMatrix base_;
    std::string parameter_;
    std::string label_;
};

// Weighted ensemble of pure states; weights nonnegative, summing to 1
// within 1e-12.
class MixtureSpec {
public:
    explicit MixtureSpec(std::vector<std::pair<double, KetVector>> components);

    const std::vector<std::pair<double, KetVector>>& components() const {
        return components_;
    }
    DensityMatrix to_density() const;

private:
    std::vector<std::pair<double, KetVector>> components_;
};

// (sum_{i<d} |i...i>)/sqrt(d) on n subsystems of local dimension d.
KetVector ghz(int n, int d);

// Equal superposition of all weight-1 computational basis states of n qubits.
KetVector w_state(int n);

// Three-qubit mixture of the eight GHZ-basis projectors
//   |psi_0^pm> = (|000> pm |111>)/sqrt(2)
//   |psi_k^pm> = (|k>_AB |0>_C pm |kbar>_AB |1>_C)/sqrt(2),  kbar = 3 - k
// with weights lambda0_plus, lambda0_minus and lambda123 (each used for both
// signs); weights must be nonnegative and sum to 1 within 1e-12.
DensityMatrix dct_state(double lambda0_plus, double lambda0_minus,
                        const std::array<double, 3>& lambda123);

NoisyFamily white_noise_family(DensityMatrix base);

// Haar-distributed pure state, deterministic given the seed: mt19937_64
// drives a Box-Muller transform (fixed algorithm, platform-independent),
// the complex-Gaussian vector is then normalized.
KetVector random_pure(const SystemShape& shape, std::uint64_t seed);

} // namespace gmecert
