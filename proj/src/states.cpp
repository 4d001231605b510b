#include "gmecert/states.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gmecert/errors.hpp"
#include "gmecert/spectral.hpp"

namespace gmecert {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenFloor = -1e-9;

double norm_of(std::span<const cplx> v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return std::sqrt(s);
}

} // namespace

KetVector::KetVector(SystemShape shape, std::vector<cplx> amplitudes)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<int>(amplitudes_.size()) != shape_.total_dim()) {
        throw shape_error("ket amplitude count does not match the total dimension");
    }
    const double n = norm_of(amplitudes_);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTol) {
        throw contract_error("ket vector is not unit-norm within 1e-12");
    }
}

double KetVector::norm() const { return norm_of(amplitudes_); }

ComplexMatrix KetVector::projector() const {
    const int d = shape_.total_dim();
    ComplexMatrix out(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
        }
    }
    return out;
}

std::string ValidationReport::failure_message() const {
    if (!finite_ok) return "matrix has non-finite entries";
    if (!hermitian_ok) return "hermiticity deviation exceeds 1e-10";
    if (!trace_ok) return "trace deviates from 1 by more than 1e-10";
    if (!positive_ok) return "smallest eigenvalue is below -1e-9";
    return "";
}

ValidationReport validate(const ComplexMatrix& rho, const SystemShape& shape) {
    if (rho.rows() != shape.total_dim() || rho.cols() != shape.total_dim()) {
        throw shape_error("validate: matrix dimensions do not match the system shape");
    }
    ValidationReport report;
    report.finite_ok = rho.all_finite();
    if (!report.finite_ok) {
        report.hermiticity_deviation = std::numeric_limits<double>::infinity();
        report.trace_deviation = std::numeric_limits<double>::infinity();
        report.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return report;
    }
    report.hermiticity_deviation = rho.hermiticity_deviation();
    report.hermitian_ok = report.hermiticity_deviation <= kHermitianTol;
    report.trace_deviation = std::abs(rho.trace() - cplx{1.0, 0.0});
    report.trace_ok = report.trace_deviation <= kTraceTol;
    if (report.hermitian_ok) {
        const auto evs = hermitian_eigenvalues(rho);
        report.min_eigenvalue = evs.front();
    } else {
        // the eigensolver contract needs a Hermitian input; fall back to the
        // symmetrized matrix so the report still carries a spectrum estimate
        ComplexMatrix sym(rho.rows(), rho.cols());
        for (int i = 0; i < rho.rows(); ++i) {
            for (int j = 0; j < rho.cols(); ++j) {
                sym(i, j) = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            }
        }
        report.min_eigenvalue = hermitian_eigenvalues(sym).front();
    }
    report.positive_ok = report.min_eigenvalue >= kEigenFloor;
    return report;
}

DensityMatrix::DensityMatrix(SystemShape shape, ComplexMatrix matrix)
    : shape_(std::move(shape)), matrix_(std::move(matrix)) {
    const auto report = validate(matrix_, shape_);
    if (!report.pass()) {
        throw contract_error("density matrix invariant violated: " + report.failure_message());
    }
}

DensityMatrix DensityMatrix::from_ket(const KetVector& psi) {
    return DensityMatrix(psi.shape(), psi.projector());
}

NoisyFamily::NoisyFamily(DensityMatrix base, std::string parameter, std::string label)
    : base_(std::move(base)), parameter_(std::move(parameter)), label_(std::move(label)) {}

DensityMatrix NoisyFamily::member(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw contract_error("family parameter " + parameter_ + " must lie in [0,1]");
    }
    const int d = base_.shape().total_dim();
    ComplexMatrix m = base_.matrix();
    m *= cplx{1.0 - x, 0.0};
    const double diag = x / d;
    for (int i = 0; i < d; ++i) m(i, i) += diag;
    return DensityMatrix(base_.shape(), std::move(m));
}

MixtureSpec::MixtureSpec(std::vector<std::pair<double, KetVector>> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw contract_error("mixture requires at least one component");
    double sum = 0.0;
    for (const auto& [w, ket] : components_) {
        if (!(w >= 0.0)) throw contract_error("mixture weights must be nonnegative");
        if (!(ket.shape() == components_.front().second.shape())) {
            throw shape_error("mixture components must share one system shape");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kNormTol) {
        throw contract_error("mixture weights must sum to 1 within 1e-12");
    }
}

DensityMatrix MixtureSpec::to_density() const {
    const auto& shape = components_.front().second.shape();
    ComplexMatrix acc(shape.total_dim(), shape.total_dim());
    for (const auto& [w, ket] : components_) {
        ComplexMatrix p = ket.projector();
        p *= cplx{w, 0.0};
        acc += p;
    }
    return DensityMatrix(shape, std::move(acc));
}

KetVector ghz(int n, int d) {
    if (n < 2 || d < 2) throw contract_error("ghz requires n >= 2 and d >= 2");
    SystemShape shape(std::vector<int>(n, d));
    std::vector<cplx> amp(shape.total_dim(), cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        long long index = 0;
        for (int k = 0; k < n; ++k) index += i * shape.stride(k);
        amp[static_cast<std::size_t>(index)] = a;
    }
    return KetVector(std::move(shape), std::move(amp));
}

KetVector w_state(int n) {
    if (n < 2) throw contract_error("w_state requires n >= 2");
    SystemShape shape(std::vector<int>(n, 2));
    std::vector<cplx> amp(shape.total_dim(), cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
        amp[static_cast<std::size_t>(shape.stride(k))] = a;
    }
    return KetVector(std::move(shape), std::move(amp));
}

DensityMatrix dct_state(double lambda0_plus, double lambda0_minus,
                        const std::array<double, 3>& lambda123) {
    if (!(lambda0_plus >= 0.0) || !(lambda0_minus >= 0.0) || !(lambda123[0] >= 0.0) ||
        !(lambda123[1] >= 0.0) || !(lambda123[2] >= 0.0)) {
        throw contract_error("dct_state weights must be nonnegative");
    }
    const double sum =
        lambda0_plus + lambda0_minus + 2.0 * (lambda123[0] + lambda123[1] + lambda123[2]);
    if (std::abs(sum - 1.0) > kNormTol) {
        throw contract_error("dct_state weights must satisfy "
                             "lambda0_plus + lambda0_minus + 2(l1+l2+l3) = 1 within 1e-12");
    }

    SystemShape shape({2, 2, 2});
    ComplexMatrix rho(8, 8);
    const auto add_projector = [&rho](double weight, int k, double sign) {
        // (|k>_AB |0>_C + sign |3-k>_AB |1>_C)/sqrt(2)
        const int u = 2 * k;            // |k>_AB|0>_C
        const int v = 2 * (3 - k) + 1;  // |kbar>_AB|1>_C
        rho(u, u) += 0.5 * weight;
        rho(v, v) += 0.5 * weight;
        rho(u, v) += 0.5 * weight * sign;
        rho(v, u) += 0.5 * weight * sign;
    };
    add_projector(lambda0_plus, 0, +1.0);
    add_projector(lambda0_minus, 0, -1.0);
    for (int k = 1; k <= 3; ++k) {
        add_projector(lambda123[k - 1], k, +1.0);
        add_projector(lambda123[k - 1], k, -1.0);
    }
    return DensityMatrix(std::move(shape), std::move(rho));
}

NoisyFamily white_noise_family(DensityMatrix base) {
    return NoisyFamily(std::move(base));
}

KetVector random_pure(const SystemShape& shape, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    const auto uniform = [&eng]() {
        // strictly inside (0,1) so the Box-Muller log stays finite
        return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
    };
    std::vector<cplx> amp(shape.total_dim());
    for (auto& a : amp) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = cplx{r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
    }
    const double n = norm_of(amp);
    for (auto& a : amp) a /= n;
    return KetVector(shape, std::move(amp));
}

} // namespace gmecert
