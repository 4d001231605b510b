#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gmecert/bounds.hpp"
#include "gmecert/concurrence.hpp"
#include "gmecert/errors.hpp"
#include "gmecert/ops.hpp"
#include "gmecert/spectral.hpp"
#include "gmecert/states.hpp"

#include "testutil.hpp"

using namespace gmecert;

namespace {

DensityMatrix reference_dct() {
    return dct_state(1.0 / 6.0, 1.0 / 2.0, {1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0});
}

DensityMatrix maximally_mixed(const SystemShape& shape) {
    ComplexMatrix m = ComplexMatrix::identity(shape.total_dim());
    m *= cplx{1.0 / shape.total_dim(), 0.0};
    return DensityMatrix(shape, std::move(m));
}

// closed forms for the white-noise scans, derived from the analytic
// partial-transpose spectra of the two GHZ-type projectors
double gghz_family_lc(double x) {
    return 0.5 * std::sqrt(2.0) * std::max(0.0, 2.0 - 20.0 * x / 9.0);
}

double ghz_family_lc(double x) {
    return 0.5 * std::sqrt(6.0) * std::max(0.0, 1.0 - 5.0 * x / 4.0);
}

} // namespace

TEST_CASE("caf_cut_bound: Bell pair across its only cut") {
    const auto rho = DensityMatrix::from_ket(ghz(2, 2));
    const auto bound = caf_cut_bound(rho, SubsetMask(0b01, rho.shape()));
    CHECK(bound.ppt_trace_norm == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(bound.realignment_trace_norm == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(bound.lower_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("caf_cut_bound: GHZ(3,3) projector single-site cut") {
    const auto rho = DensityMatrix::from_ket(ghz(3, 3));
    const auto bound = caf_cut_bound(rho, SubsetMask(0b001, rho.shape()));
    // analytic PT spectrum: diagonal 1/3 (x3) plus 2x2 blocks giving +-1/3
    CHECK(bound.ppt_trace_norm == doctest::Approx(3.0).epsilon(1e-11));
    CHECK(bound.lower_bound == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("caf_cut_bound: fully separable product states clamp to zero") {
    const SystemShape shape({2, 2, 2});
    std::vector<cplx> amp(8, cplx{0.0, 0.0});
    amp[0] = 1.0;
    const auto rho = DensityMatrix::from_ket(KetVector(shape, std::move(amp)));
    for (const auto& cut : all_cuts(shape)) {
        const auto bound = caf_cut_bound(rho, cut);
        CHECK(bound.ppt_trace_norm <= 1.0 + 1e-10);
        CHECK(bound.realignment_trace_norm <= 1.0 + 1e-10);
        CHECK(bound.lower_bound == 0.0);
    }
}

TEST_CASE("caf_cut_bound: pure states have equal PT and realignment norms") {
    // both trace norms equal the squared sum of Schmidt coefficients on a
    // pure state, for every cut, including non-leading ones
    for (const auto& dims : {std::vector<int>{2, 2, 2}, {2, 3, 2}, {3, 3, 3}}) {
        const SystemShape shape(dims);
        for (int trial = 0; trial < 6; ++trial) {
            const auto rho = DensityMatrix::from_ket(random_pure(shape, 900 + trial));
            for (const auto& cut : all_cuts(shape)) {
                const auto bound = caf_cut_bound(rho, cut);
                CHECK(std::abs(bound.ppt_trace_norm - bound.realignment_trace_norm) < 1e-9);
            }
        }
    }
}

TEST_CASE("caf_cut_bound: DCT per-cut norms match frozen oracle values") {
    const auto rho = reference_dct();
    for (const auto& cut : all_cuts(rho.shape())) {
        const auto bound = caf_cut_bound(rho, cut);
        // analytic PT spectrum gives trace norm 11/9 on every cut; the
        // realignment norm is the frozen value of an independent evaluation
        CHECK(bound.ppt_trace_norm == doctest::Approx(11.0 / 9.0).epsilon(1e-11));
        CHECK(bound.realignment_trace_norm ==
              doctest::Approx(1.0155616605155842).epsilon(1e-9));
        CHECK(bound.lower_bound == doctest::Approx(2.0 / 9.0).epsilon(1e-10));
    }
    const auto report = gme_detect(rho);
    CHECK(report.lc_n == doctest::Approx(std::sqrt(6.0) / 9.0).epsilon(1e-10));
    CHECK(report.verdict == Verdict::undecided);
}

TEST_CASE("proposition_lower_bound: bipartite states work without a verdict") {
    const auto bell = DensityMatrix::from_ket(ghz(2, 2));
    const auto report = proposition_lower_bound(bell);
    CHECK(report.lc_n == doctest::Approx(1.0).epsilon(1e-11));
    CHECK_FALSE(report.threshold.has_value());
    CHECK_FALSE(report.verdict.has_value());
    CHECK(std::abs(report.lc_n - pure_concurrence(ghz(2, 2))) < 1e-10);
}

TEST_CASE("proposition_lower_bound: saturates on GHZ-type projectors") {
    const auto g32 = DensityMatrix::from_ket(ghz(3, 2));
    const auto report32 = proposition_lower_bound(g32);
    CHECK(report32.lc_n == doctest::Approx(std::sqrt(1.5)).epsilon(1e-10));
    CHECK(std::abs(report32.lc_n - pure_concurrence(ghz(3, 2))) < 1e-9);

    const auto g33 = DensityMatrix::from_ket(ghz(3, 3));
    const auto report33 = proposition_lower_bound(g33);
    CHECK(report33.lc_n == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(std::abs(report33.lc_n - pure_concurrence(ghz(3, 3))) < 1e-9);

    REQUIRE(report33.threshold.has_value());
    CHECK(report33.threshold->value == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
    CHECK(report33.verdict == Verdict::gme_certified);
}

TEST_CASE("proposition_lower_bound: white-noise GGHZ family closed form") {
    const auto family = white_noise_family(DensityMatrix::from_ket(ghz(3, 3)));
    for (double x : {0.0, 0.05, 0.1, 0.16, 0.3, 0.6, 0.85}) {
        const auto report = proposition_lower_bound(family.member(x));
        CHECK(report.lc_n == doctest::Approx(gghz_family_lc(x)).epsilon(1e-9));
    }
}

TEST_CASE("proposition_lower_bound: maximally mixed state reports zero") {
    const auto report = proposition_lower_bound(maximally_mixed(SystemShape({2, 2, 2})));
    CHECK(report.lc_n == 0.0);
    CHECK(report.separable_consistent);
    CHECK(report.verdict == Verdict::undecided);
    CHECK(report.classification() == Verdict::fully_separable_consistent);
}

TEST_CASE("proposition_lower_bound: report invariants") {
    const auto family = white_noise_family(DensityMatrix::from_ket(ghz(3, 2)));
    const auto report = proposition_lower_bound(family.member(0.2));
    REQUIRE(report.cuts.size() == 6);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < report.cuts.size(); ++i) {
        CHECK(report.cuts[i].cut.bits() == i + 1);
        const auto& c = report.cuts[i];
        const double m = static_cast<double>(std::min(c.cut.dim(), c.cut.complement_dim()));
        const double expected = std::max(
            0.0, std::sqrt(2.0 / (m * (m - 1.0))) *
                     (std::max(c.ppt_trace_norm, c.realignment_trace_norm) - 1.0));
        CHECK(c.lower_bound == doctest::Approx(expected).epsilon(1e-14));
        sum_sq += c.lower_bound * c.lower_bound;
    }
    CHECK(report.lc_n == doctest::Approx(0.5 * std::sqrt(sum_sq)).epsilon(1e-14));
}

TEST_CASE("proposition_lower_bound: heterogeneous dims give no verdict") {
    const auto rho = DensityMatrix::from_ket(random_pure(SystemShape({2, 3, 2}), 8));
    const auto report = proposition_lower_bound(rho);
    CHECK_FALSE(report.threshold.has_value());
    CHECK_FALSE(report.verdict.has_value());
    CHECK(report.lc_n >= 0.0);
}

TEST_CASE("gme_detect: white-noise examples") {
    const auto gghz_family = white_noise_family(DensityMatrix::from_ket(ghz(3, 3)));
    CHECK(gme_detect(gghz_family.member(0.1)).verdict == Verdict::gme_certified);
    CHECK(gme_detect(gghz_family.member(0.2)).verdict == Verdict::undecided);

    const auto ghz_family = white_noise_family(DensityMatrix::from_ket(ghz(3, 2)));
    CHECK(gme_detect(ghz_family.member(0.1)).verdict == Verdict::gme_certified);

    CHECK(gme_detect(maximally_mixed(SystemShape({2, 2, 2}))).verdict == Verdict::undecided);

    CHECK_THROWS_AS(gme_detect(DensityMatrix::from_ket(ghz(2, 2))), contract_error);
    CHECK_THROWS_AS(gme_detect(DensityMatrix::from_ket(random_pure(SystemShape({2, 3, 2}), 3))),
                    unsupported_error);
}

TEST_CASE("scan_family: reproduces the white-noise detection thresholds") {
    const auto gghz_scan =
        scan_family(white_noise_family(DensityMatrix::from_ket(ghz(3, 3))), 200);
    REQUIRE(gghz_scan.detection_threshold.has_value());
    CHECK(std::abs(*gghz_scan.detection_threshold - 0.16515307716463212) < 5e-4);

    const auto ghz_scan =
        scan_family(white_noise_family(DensityMatrix::from_ket(ghz(3, 2))), 200);
    REQUIRE(ghz_scan.detection_threshold.has_value());
    CHECK(std::abs(*ghz_scan.detection_threshold - 0.14680273525800658) < 5e-4);

    // grid is strictly increasing and each crossing sits inside its bracket
    for (std::size_t i = 1; i < gghz_scan.samples.size(); ++i) {
        CHECK(gghz_scan.samples[i].first > gghz_scan.samples[i - 1].first);
    }
    REQUIRE(gghz_scan.crossing_brackets.size() == 1);
    CHECK(gghz_scan.crossing_brackets.front().first <= *gghz_scan.detection_threshold);
    CHECK(*gghz_scan.detection_threshold <= gghz_scan.crossing_brackets.front().second);
}

TEST_CASE("scan_family: refinement tightens the crossing") {
    const auto scan =
        scan_family(white_noise_family(DensityMatrix::from_ket(ghz(3, 2))), 50, 1e-8);
    REQUIRE(scan.detection_threshold.has_value());
    CHECK(std::abs(*scan.detection_threshold - 0.14680273525800658) < 1e-6);
}

TEST_CASE("scan_family: no crossing for a maximally mixed base") {
    const auto scan =
        scan_family(white_noise_family(maximally_mixed(SystemShape({2, 2, 2}))), 50);
    CHECK_FALSE(scan.detection_threshold.has_value());
    CHECK(scan.crossing_brackets.empty());
    CHECK(scan.lc_at_0 == 0.0);
    CHECK(scan.lc_at_1 == 0.0);
}

TEST_CASE("scan_family: monotone nonincreasing under white noise") {
    for (int d : {2, 3}) {
        const auto scan = scan_family(white_noise_family(DensityMatrix::from_ket(ghz(3, d))), 100);
        for (std::size_t i = 1; i < scan.samples.size(); ++i) {
            CHECK(scan.samples[i].second <= scan.samples[i - 1].second + 1e-10);
        }
    }
}

TEST_CASE("zhao closed form: endpoints and unit-crossing root") {
    CHECK(zhao_ghz_closed_form(0.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(zhao_ghz_closed_form(1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-12));

    double a = 0.0;
    double b = 0.3;
    while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        if (zhao_ghz_closed_form(mid) > 1.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    CHECK(std::abs(0.5 * (a + b) - 0.03367350481121746) < 1e-8);
}

TEST_CASE("gao closed form: endpoints and monotonicity") {
    CHECK(gao_ghz_closed_form(0.0) == doctest::Approx(0.6035533905932737).epsilon(1e-12));
    CHECK(gao_ghz_closed_form(1.0) == doctest::Approx(0.0).epsilon(1e-12));
    double prev = gao_ghz_closed_form(0.0);
    for (int i = 1; i <= 100; ++i) {
        const double v = gao_ghz_closed_form(i / 100.0);
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("compare_bounds_curve: crossovers and pure-state agreement") {
    const auto curve = compare_bounds_curve(100);
    REQUIRE(curve.rows.size() == 100);
    CHECK(curve.rows.front().zhao > curve.rows.front().gao);
    CHECK(curve.rows.front().lc == doctest::Approx(std::sqrt(1.5)).epsilon(1e-10));
    CHECK(curve.rows.front().lc == doctest::Approx(curve.rows.front().zhao).epsilon(1e-10));

    REQUIRE(curve.crossover_zhao_gao.has_value());
    CHECK(std::abs(*curve.crossover_zhao_gao - 0.1594831616166026) < 1e-6);
}

TEST_CASE("two_qubit_concurrence: reference values") {
    CHECK(two_qubit_concurrence(DensityMatrix::from_ket(ghz(2, 2))) ==
          doctest::Approx(1.0).epsilon(1e-11));

    const SystemShape shape({2, 2});
    ComplexMatrix diag(4, 4);
    diag(0, 0) = 0.4;
    diag(1, 1) = 0.3;
    diag(2, 2) = 0.2;
    diag(3, 3) = 0.1;
    CHECK(two_qubit_concurrence(DensityMatrix(shape, std::move(diag))) ==
          doctest::Approx(0.0).epsilon(1e-11));

    CHECK_THROWS_AS(two_qubit_concurrence(DensityMatrix::from_ket(ghz(3, 2))), shape_error);
}

TEST_CASE("two_qubit_concurrence: W-state marginal with a spin-flip oracle") {
    const auto w = w_state(3);
    const SystemShape pair_shape({2, 2});
    const auto marginal = testutil::oracle_partial_trace(w.projector(), {2, 2, 2}, 0b011);
    const auto rho = DensityMatrix(pair_shape, marginal);

    // oracle: rho * flip * conj(rho) * flip collapses to (4/9) projector onto
    // (|01> + |10>)/sqrt(2), so the top mu is 2/3 and the rest vanish
    ComplexMatrix flip(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const auto product = rho.matrix() * flip * rho.matrix().conjugate() * flip;
    ComplexMatrix expected(4, 4);
    expected(1, 1) = 2.0 / 9.0;
    expected(1, 2) = 2.0 / 9.0;
    expected(2, 1) = 2.0 / 9.0;
    expected(2, 2) = 2.0 / 9.0;
    CHECK(testutil::max_abs_diff(product, expected) < 1e-13);

    CHECK(two_qubit_concurrence(rho) == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("property: lc_n is sound on pure states (300 seeded cases)") {
    struct Combo {
        std::vector<int> dims;
        int cases;
    };
    const Combo combos[] = {
        {{2, 2, 2}, 120}, {{3, 3, 3}, 90}, {{2, 2, 2, 2}, 80}, {{3, 3, 3, 3}, 10}};
    int total = 0;
    for (const auto& combo : combos) {
        const SystemShape shape(combo.dims);
        for (int i = 0; i < combo.cases; ++i) {
            const auto psi = random_pure(shape, 5000 + total);
            const auto rho = DensityMatrix::from_ket(psi);
            const auto report = proposition_lower_bound(rho);
            CHECK(report.lc_n <= pure_concurrence(psi) + 1e-8);
            for (const auto& cut : report.cuts) {
                CHECK(cut.lower_bound <=
                      pure_bipartite_concurrence(psi, cut.cut) + 1e-8);
            }
            ++total;
        }
    }
    CHECK(total == 300);
}

TEST_CASE("property: no GME certification on biseparable 3-qubit mixtures") {
    const SystemShape shape({2, 2, 2});
    auto rng = testutil::make_rng(6000);
    for (int trial = 0; trial < 200; ++trial) {
        const int parts = 2 + static_cast<int>(rng() % 3);
        std::vector<std::pair<double, KetVector>> components;
        std::vector<double> weights(static_cast<std::size_t>(parts));
        double sum = 0.0;
        for (auto& w : weights) {
            w = testutil::uniform01(rng) + 1e-3;
            sum += w;
        }
        for (int p = 0; p < parts; ++p) {
            const std::uint32_t cut_bits = 1u + static_cast<std::uint32_t>(rng() % 6u);
            components.emplace_back(weights[static_cast<std::size_t>(p)] / sum,
                                    testutil::random_biseparable(shape, cut_bits, rng()));
        }
        double renorm = 0.0;
        for (auto& [w, k] : components) renorm += w;
        for (auto& [w, k] : components) w /= renorm;
        const auto rho = MixtureSpec(std::move(components)).to_density();
        CHECK(gme_detect(rho).verdict != Verdict::gme_certified);
    }
}

TEST_CASE("property: combined monogamy cross-check with equality at W") {
    const SystemShape shape({2, 2, 2});
    const SystemShape pair_shape({2, 2});
    const std::uint32_t pair_masks[] = {0b011, 0b101, 0b110};

    const auto pair_concurrence_sq = [&](const KetVector& psi) {
        double total = 0.0;
        for (std::uint32_t bits : pair_masks) {
            const auto marginal = partial_trace(psi.projector(), shape, SubsetMask(bits, shape));
            const double c = two_qubit_concurrence(DensityMatrix(pair_shape, marginal));
            total += c * c;
        }
        return total;
    };

    for (int trial = 0; trial < 200; ++trial) {
        const auto psi = random_pure(shape, 7000 + trial);
        const double c3 = pure_concurrence(psi);
        CHECK(c3 * c3 >= pair_concurrence_sq(psi) - 1e-8);
    }

    const auto w = w_state(3);
    const double c3w = pure_concurrence(w);
    CHECK(std::abs(c3w * c3w - 4.0 / 3.0) < 1e-8);
    CHECK(std::abs(pair_concurrence_sq(w) - 4.0 / 3.0) < 1e-8);
    CHECK(std::abs(c3w * c3w - pair_concurrence_sq(w)) < 1e-8);
}
