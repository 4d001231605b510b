#include "gmecert/concurrence.hpp"

#include <bit>
#include <cmath>

#include "gmecert/errors.hpp"
#include "gmecert/ops.hpp"
#include "gmecert/spectral.hpp"

namespace gmecert {

namespace {

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

void require_homogeneous(const SystemShape& shape, const char* operation) {
    if (!shape.homogeneous()) {
        throw unsupported_error(std::string(operation) +
                                " requires equal local dimensions on all subsystems");
    }
}

} // namespace

double reduced_purity(const KetVector& psi, const SubsetMask& subset) {
    const auto& shape = psi.shape();
    const auto kept = subset.members();
    std::vector<int> comp;
    for (int i = 0; i < shape.subsystem_count(); ++i) {
        if (!subset.contains(i)) comp.push_back(i);
    }
    const auto row_offsets = subsystem_offsets(shape, kept);
    const auto col_offsets = subsystem_offsets(shape, comp);
    const int dk = static_cast<int>(row_offsets.size());
    const int dc = static_cast<int>(col_offsets.size());

    // rho_subset = M M^dagger with M(a,b) = psi[row_a + col_b];
    // Tr(rho_subset^2) = ||M M^dagger||_F^2
    const auto amp = psi.amplitudes();
    double total = 0.0;
    for (int a = 0; a < dk; ++a) {
        for (int b = 0; b < dk; ++b) {
            cplx g{0.0, 0.0};
            for (int e = 0; e < dc; ++e) {
                g += amp[static_cast<std::size_t>(row_offsets[a] + col_offsets[e])] *
                     std::conj(amp[static_cast<std::size_t>(row_offsets[b] + col_offsets[e])]);
            }
            total += std::norm(g);
        }
    }
    return total;
}

double pure_concurrence(const KetVector& psi) {
    const int n = psi.shape().subsystem_count();
    if (n < 2) throw contract_error("pure_concurrence requires at least two subsystems");

    double purity_sum = 0.0;
    for (const auto& mask : all_cuts(psi.shape())) {
        purity_sum += reduced_purity(psi, mask);
    }
    const double radicand = (std::pow(2.0, n) - 2.0) - purity_sum;
    if (radicand < -1e-10) {
        throw numeric_error("pure_concurrence: negative radicand beyond tolerance");
    }
    return std::pow(2.0, 1.0 - 0.5 * n) * std::sqrt(std::max(radicand, 0.0));
}

double pure_bipartite_concurrence(const KetVector& psi, const SubsetMask& cut) {
    cut.require_proper("pure_bipartite_concurrence");
    const double radicand = 2.0 * (1.0 - reduced_purity(psi, cut));
    if (radicand < -1e-10) {
        throw numeric_error("pure_bipartite_concurrence: negative radicand beyond tolerance");
    }
    return std::sqrt(std::max(radicand, 0.0));
}

ThresholdValue gme_threshold(int n, int d) {
    if (n < 3 || d < 2) throw contract_error("gme_threshold requires n >= 3 and d >= 2");
    ThresholdValue out;
    out.n = n;
    out.d = d;
    out.even_branch = (n % 2 == 0);

    double inner = std::pow(2.0, n) - 4.0 + 2.0 / d;
    if (out.even_branch) {
        for (int k = 1; k <= n / 2 - 1; ++k) {
            inner -= 2.0 * binomial(n, k) / std::pow(static_cast<double>(d), k);
        }
        inner -= binomial(n, n / 2) / std::pow(static_cast<double>(d), n / 2);
    } else {
        for (int k = 1; k <= (n - 1) / 2; ++k) {
            inner -= 2.0 * binomial(n, k) / std::pow(static_cast<double>(d), k);
        }
    }
    out.value = std::pow(2.0, 1.0 - 0.5 * n) * std::sqrt(inner);
    return out;
}

GellMannBasis gell_mann_basis(int d) {
    if (d < 2) throw contract_error("gell_mann_basis requires d >= 2");
    GellMannBasis basis;
    basis.d = d;
    basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.generators.push_back(std::move(m));
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = cplx{0.0, -1.0};
            m(k, j) = cplx{0.0, 1.0};
            basis.generators.push_back(std::move(m));
        }
    }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix m(d, d);
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) m(j, j) = scale;
        m(l, l) = -scale * l;
        basis.generators.push_back(std::move(m));
    }
    return basis;
}

CorrelationTensor::CorrelationTensor(SubsetMask subset, int local_dim,
                                     std::vector<double> entries)
    : subset_(std::move(subset)), local_dim_(local_dim), entries_(std::move(entries)) {
    std::size_t expected = 1;
    for (int i = 0; i < subset_.size(); ++i) {
        expected *= static_cast<std::size_t>(axis_length());
    }
    if (entries_.size() != expected) {
        throw shape_error("correlation tensor entry count does not match its axes");
    }
}

double CorrelationTensor::entry(std::span<const int> alphas) const {
    if (static_cast<int>(alphas.size()) != subset_.size()) {
        throw shape_error("correlation tensor index arity mismatch");
    }
    std::size_t idx = 0;
    for (int a : alphas) {
        if (a < 0 || a >= axis_length()) throw shape_error("correlation tensor index out of range");
        idx = idx * static_cast<std::size_t>(axis_length()) + static_cast<std::size_t>(a);
    }
    return entries_[idx];
}

double CorrelationTensor::norm_sq() const {
    double s = 0.0;
    for (double e : entries_) s += e * e;
    return s;
}

namespace {

void fill_tensor_entries(const ComplexMatrix& reduced,
                         const std::vector<ComplexMatrix>& generators,
                         const ComplexMatrix& prefix, int level, int depth,
                         double prefactor, std::vector<double>& entries) {
    if (level == depth) {
        const cplx t = prefactor * trace_product(reduced, prefix);
        if (std::abs(t.imag()) > 1e-10) {
            throw contract_error("correlation tensor entry has an imaginary residue above 1e-10");
        }
        entries.push_back(t.real());
        return;
    }
    for (const auto& g : generators) {
        fill_tensor_entries(reduced, generators, level == 0 ? g : kron(prefix, g),
                            level + 1, depth, prefactor, entries);
    }
}

} // namespace

CorrelationTensor correlation_tensor(const DensityMatrix& rho, const SubsetMask& subset) {
    const auto& shape = rho.shape();
    require_homogeneous(shape, "correlation_tensor");

    const int d = shape.local_dim(0);
    const int depth = subset.size();
    const ComplexMatrix reduced =
        subset.is_proper() ? partial_trace(rho.matrix(), shape, subset) : rho.matrix();

    const auto basis = gell_mann_basis(d);
    std::vector<double> entries;
    std::size_t count = 1;
    for (int i = 0; i < depth; ++i) count *= static_cast<std::size_t>(d * d - 1);
    entries.reserve(count);

    const double prefactor = std::pow(0.5 * d, depth);
    fill_tensor_entries(reduced, basis.generators, ComplexMatrix(), 0, depth, prefactor,
                        entries);
    return CorrelationTensor(subset, d, std::move(entries));
}

double purity_via_tensors(const DensityMatrix& rho, const SubsetMask& subset) {
    const auto& shape = rho.shape();
    require_homogeneous(shape, "purity_via_tensors");

    const int d = shape.local_dim(0);
    const int m = subset.size();
    double acc = 1.0;
    const std::uint32_t bits = subset.bits();
    for (std::uint32_t s = bits; s != 0; s = (s - 1) & bits) {
        const auto tensor = correlation_tensor(rho, SubsetMask(s, shape));
        acc += std::pow(2.0 / d, std::popcount(s)) * tensor.norm_sq();
    }
    return acc / std::pow(static_cast<double>(d), m);
}

} // namespace gmecert
