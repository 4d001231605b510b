#include "gmecert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "gmecert/errors.hpp"

namespace gmecert {

namespace {

constexpr double kHermiticityTol = 1e-10;

int jacobi_sweep_cap() {
    static const int cap = [] {
        if (const char* s = std::getenv("GME_EIG_SWEEP_CAP")) {
            char* end = nullptr;
            const long v = std::strtol(s, &end, 10);
            if (end != s && *end == '\0' && v >= 0 && v <= 100000) {
                return static_cast<int>(v);
            }
        }
        return 60;
    }();
    return cap;
}

double offdiagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.rows(); ++p) {
        for (int q = p + 1; q < a.cols(); ++q) {
            s += 2.0 * std::norm(a(p, q));
        }
    }
    return std::sqrt(s);
}

// Diagonalizes the Hermitian matrix in place by cyclic Jacobi rotations.
// Returns eigenvalues ascending; fills `vectors` (columns) when requested.
std::vector<double> jacobi(ComplexMatrix a, ComplexMatrix* vectors) {
    const int n = a.rows();
    if (vectors) *vectors = ComplexMatrix::identity(n);

    // symmetrize once so rounding asymmetry in the input cannot accumulate
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const cplx v = 0.5 * (a(p, q) + std::conj(a(q, p)));
            a(p, q) = v;
            a(q, p) = std::conj(v);
        }
        a(p, p) = cplx{a(p, p).real(), 0.0};
    }

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double tol = 1e-14 * scale;
    const double skip = 1e-18 * scale;

    int sweeps = 0;
    while (offdiagonal_norm(a) > tol) {
        if (sweeps++ >= jacobi_sweep_cap()) {
            throw numeric_error("eigensolver did not converge within the sweep cap");
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= skip) continue;

                const cplx phase = apq / mag;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sc = s * std::conj(phase);

                // columns: A <- A * J
                for (int r = 0; r < n; ++r) {
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = c * arp - sc * arq;
                    a(r, q) = s * arp + c * std::conj(phase) * arq;
                }
                // rows: A <- J^H * A
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = cplx{0.0, 0.0};
                a(q, p) = cplx{0.0, 0.0};
                a(p, p) = cplx{a(p, p).real(), 0.0};
                a(q, q) = cplx{a(q, q).real(), 0.0};

                if (vectors) {
                    for (int r = 0; r < n; ++r) {
                        const cplx vrp = (*vectors)(r, p);
                        const cplx vrq = (*vectors)(r, q);
                        (*vectors)(r, p) = c * vrp - sc * vrq;
                        (*vectors)(r, q) = s * vrp + c * std::conj(phase) * vrq;
                    }
                }
            }
        }
    }

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = a(i, i).real();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return values[i] < values[j]; });

    std::vector<double> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = values[order[i]];
    if (vectors) {
        ComplexMatrix permuted(n, n);
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r < n; ++r) permuted(r, j) = (*vectors)(r, order[j]);
        }
        *vectors = std::move(permuted);
    }
    return sorted;
}

void check_hermitian_input(const ComplexMatrix& h) {
    if (!h.is_square()) throw shape_error("eigensolver requires a square matrix");
    if (!h.all_finite()) throw contract_error("eigensolver input has non-finite entries");
    if (h.hermiticity_deviation() > kHermiticityTol) {
        throw contract_error("eigensolver input is not Hermitian within 1e-10");
    }
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    check_hermitian_input(h);
    return jacobi(h, nullptr);
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
    check_hermitian_input(h);
    EigenSystem out;
    out.values = jacobi(h, &out.vectors);
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    // Gram matrix on the smaller side; singular values are the square roots
    // of its spectrum.
    const bool wide = m.rows() <= m.cols();
    const ComplexMatrix gram = wide ? m * m.adjoint() : m.adjoint() * m;
    auto evs = hermitian_eigenvalues(gram);

    const double top = std::max(evs.empty() ? 0.0 : evs.back(), 1.0);
    const double floor = -1e-9 * top;
    // Gram eigenvalues of exact-zero modes land at +-O(eps * top); taking
    // square roots there would inflate the spectrum by O(sqrt(eps)), so
    // anything below the noise floor deflates to an exact zero.
    const double noise_floor = 1e-13 * top;
    std::vector<double> sv;
    sv.reserve(evs.size());
    for (auto it = evs.rbegin(); it != evs.rend(); ++it) {
        if (*it < floor) {
            throw numeric_error("singular-value computation produced a negative Gram eigenvalue");
        }
        sv.push_back(*it <= noise_floor ? 0.0 : std::sqrt(*it));
    }
    return sv;
}

double trace_norm(const ComplexMatrix& m) {
    if (m.is_square() && m.hermiticity_deviation() <= kHermiticityTol) {
        double s = 0.0;
        for (double v : hermitian_eigenvalues(m)) s += std::abs(v);
        return s;
    }
    double s = 0.0;
    for (double v : singular_values(m)) s += v;
    return s;
}

double purity(const ComplexMatrix& rho) {
    if (!rho.is_square()) throw shape_error("purity requires a square matrix");
    cplx t{0.0, 0.0};
    for (int i = 0; i < rho.rows(); ++i) {
        for (int j = 0; j < rho.cols(); ++j) {
            t += rho(i, j) * rho(j, i);
        }
    }
    if (std::abs(t.imag()) > 1e-9) {
        throw contract_error("purity: Tr(rho^2) has an imaginary residue above 1e-9");
    }
    return t.real();
}

} // namespace gmecert
