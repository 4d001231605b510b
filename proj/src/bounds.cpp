#include "gmecert/bounds.hpp"

#include <cmath>

#include "gmecert/errors.hpp"
#include "gmecert/ops.hpp"
#include "gmecert/spectral.hpp"

namespace gmecert {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::gme_certified: return "GME-certified";
        case Verdict::undecided: return "undecided";
        case Verdict::fully_separable_consistent: return "fully-separable-consistent";
    }
    return "unknown";
}

CutBound caf_cut_bound(const DensityMatrix& rho, const SubsetMask& cut) {
    cut.require_proper("caf_cut_bound");

    CutBound out{cut, 0.0, 0.0, 0.0};
    out.ppt_trace_norm = trace_norm(partial_transpose(rho.matrix(), rho.shape(), cut));

    const auto bipartite = as_bipartite(rho.matrix(), rho.shape(), cut);
    out.realignment_trace_norm = trace_norm(realign(bipartite.matrix, bipartite.shape));

    const double m = static_cast<double>(std::min(cut.dim(), cut.complement_dim()));
    const double witness = std::max(out.ppt_trace_norm, out.realignment_trace_norm) - 1.0;
    out.lower_bound = std::max(0.0, std::sqrt(2.0 / (m * (m - 1.0))) * witness);
    return out;
}

Verdict BoundReport::classification() const {
    if (separable_consistent) return Verdict::fully_separable_consistent;
    return verdict.value_or(Verdict::undecided);
}

BoundReport proposition_lower_bound(const DensityMatrix& rho) {
    const auto& shape = rho.shape();
    const int n = shape.subsystem_count();
    if (n < 2) throw contract_error("proposition_lower_bound requires at least two subsystems");

    BoundReport report;
    double sum_sq = 0.0;
    for (const auto& cut : all_cuts(shape)) {
        report.cuts.push_back(caf_cut_bound(rho, cut));
        sum_sq += report.cuts.back().lower_bound * report.cuts.back().lower_bound;
    }
    report.lc_n = std::pow(2.0, 0.5 * (1.0 - n)) * std::sqrt(sum_sq);
    report.separable_consistent = (report.lc_n == 0.0);

    if (n >= 3 && shape.homogeneous()) {
        report.threshold = gme_threshold(n, shape.local_dim(0));
        report.verdict = report.lc_n > report.threshold->value ? Verdict::gme_certified
                                                               : Verdict::undecided;
    }
    return report;
}

BoundReport gme_detect(const DensityMatrix& rho) {
    const auto& shape = rho.shape();
    if (shape.subsystem_count() < 3) {
        throw contract_error("gme_detect requires at least three subsystems");
    }
    if (!shape.homogeneous()) {
        throw unsupported_error("gme_detect requires equal local dimensions on all subsystems");
    }
    return proposition_lower_bound(rho);
}

ScanResult scan_family(const NoisyFamily& family, int grid, double refine) {
    if (grid < 2) throw contract_error("scan_family requires a grid of at least 2 points");
    if (!(refine > 0.0)) throw contract_error("scan_family refine tolerance must be positive");
    const auto& shape = family.shape();
    if (shape.subsystem_count() < 3 || !shape.homogeneous()) {
        throw unsupported_error(
            "scan_family requires at least three subsystems of equal local dimension");
    }

    ScanResult result;
    result.family_id = family.label();
    result.threshold = gme_threshold(shape.subsystem_count(), shape.local_dim(0)).value;

    const auto lc_at = [&family](double x) {
        return proposition_lower_bound(family.member(x)).lc_n;
    };
    const auto detected = [&](double lc) { return lc > result.threshold; };

    result.samples.reserve(grid);
    for (int i = 0; i < grid; ++i) {
        const double x = static_cast<double>(i) / (grid - 1);
        result.samples.emplace_back(x, lc_at(x));
    }
    result.lc_at_0 = result.samples.front().second;
    result.lc_at_1 = result.samples.back().second;

    for (int i = 0; i + 1 < grid; ++i) {
        const bool lo = detected(result.samples[i].second);
        const bool hi = detected(result.samples[i + 1].second);
        if (lo == hi) continue;

        double a = result.samples[i].first;
        double b = result.samples[i + 1].first;
        result.crossing_brackets.emplace_back(a, b);
        bool a_detected = lo;
        while (b - a > refine) {
            const double mid = 0.5 * (a + b);
            if (detected(lc_at(mid)) == a_detected) {
                a = mid;
            } else {
                b = mid;
            }
        }
        const double crossing = 0.5 * (a + b);
        if (!result.detection_threshold || crossing < *result.detection_threshold) {
            result.detection_threshold = crossing;
        }
    }
    return result;
}

double zhao_ghz_closed_form(double x) {
    return std::max(0.0, std::sqrt(1.5) * (1.0 - 3.0 * x) / (1.0 + 3.0 * x));
}

double gao_ghz_closed_form(double x) {
    const double value =
        -0.5 + (3.0 - 3.0 * x) / 4.0 + (2.0 - 2.0 * x + x * x) / (4.0 * std::sqrt(2.0));
    return std::max(0.0, value);
}

namespace {

// First abscissa where f - g flips between definite signs on [0,1], refined
// by bisection. Grid points where the curves agree within 1e-9 are skipped,
// so exact touching (equal endpoints, both curves clamped at zero) does not
// masquerade as a crossover.
template <typename F, typename G>
std::optional<double> first_crossover(const F& f, const G& g, int grid, double refine) {
    constexpr double kEqualTol = 1e-9;
    int prev_sign = 0;
    double prev_x = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double x = static_cast<double>(i) / (grid - 1);
        const double diff = f(x) - g(x);
        if (std::abs(diff) <= kEqualTol) continue;
        const int sign = diff > 0.0 ? 1 : -1;
        if (prev_sign != 0 && sign != prev_sign) {
            double a = prev_x;
            double b = x;
            while (b - a > refine) {
                const double mid = 0.5 * (a + b);
                const double dm = f(mid) - g(mid);
                if ((dm > 0.0 ? 1 : -1) == prev_sign) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        prev_sign = sign;
        prev_x = x;
    }
    return std::nullopt;
}

} // namespace

ComparisonCurve compare_bounds_curve(int grid) {
    if (grid < 2) throw contract_error("compare_bounds_curve requires a grid of at least 2 points");

    const NoisyFamily family = white_noise_family(DensityMatrix::from_ket(ghz(3, 2)));
    const auto lc_at = [&family](double x) {
        return proposition_lower_bound(family.member(x)).lc_n;
    };

    ComparisonCurve curve;
    curve.rows.reserve(grid);
    for (int i = 0; i < grid; ++i) {
        const double x = static_cast<double>(i) / (grid - 1);
        curve.rows.push_back({x, zhao_ghz_closed_form(x), gao_ghz_closed_form(x), lc_at(x)});
    }

    constexpr double kRefine = 1e-9;
    curve.crossover_zhao_gao =
        first_crossover(zhao_ghz_closed_form, gao_ghz_closed_form, grid, kRefine);
    curve.crossover_lc_gao = first_crossover(lc_at, gao_ghz_closed_form, grid, kRefine);
    curve.crossover_lc_zhao = first_crossover(lc_at, zhao_ghz_closed_form, grid, kRefine);
    return curve;
}

double two_qubit_concurrence(const DensityMatrix& rho) {
    const auto& dims = rho.shape().dims();
    if (dims != std::vector<int>{2, 2}) {
        throw shape_error("two_qubit_concurrence requires a (2,2) system");
    }

    // spin-flip operator (sy x sy), real antidiagonal
    ComplexMatrix flip(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;

    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix flipped = flip * m.conjugate() * flip;

    // mu_i^2 are the eigenvalues of rho rho~, shared with the Hermitian
    // product sqrt(rho) rho~ sqrt(rho)
    const auto eig = hermitian_eigensystem(m);
    ComplexMatrix sqrt_rho(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < 4; ++k) {
                const double lam = std::max(eig.values[k], 0.0);
                acc += eig.vectors(i, k) * std::sqrt(lam) * std::conj(eig.vectors(j, k));
            }
            sqrt_rho(i, j) = acc;
        }
    }

    const ComplexMatrix core = sqrt_rho * flipped * sqrt_rho;
    auto evs = hermitian_eigenvalues(core);   // ascending
    double c = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double mu = std::sqrt(std::max(evs[static_cast<std::size_t>(k)], 0.0));
        c += (k == 3) ? mu : -mu;
    }
    return std::max(0.0, c);
}

} // namespace gmecert
