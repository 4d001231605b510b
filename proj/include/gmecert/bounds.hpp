#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmecert/concurrence.hpp"
#include "gmecert/shape.hpp"
#include "gmecert/states.hpp"

namespace gmecert {

enum class Verdict { gme_certified, undecided, fully_separable_consistent };

std::string_view verdict_name(Verdict v);

// Operational lower bound on the bipartite concurrence across one cut,
// from the larger of the partial-transpose and realignment trace norms:
//   max(0, sqrt(2/(m(m-1))) * (max(|rho^T_cut|_1, |R(rho)|_1) - 1)),
// m the smaller of the two cut dimensions.
struct CutBound {
    SubsetMask cut;
    double ppt_trace_norm = 0.0;
    double realignment_trace_norm = 0.0;
    double lower_bound = 0.0;
};

CutBound caf_cut_bound(const DensityMatrix& rho, const SubsetMask& cut);

// Aggregated lower bound on the multipartite concurrence:
//   lc_n = 2^{(1-N)/2} sqrt( sum over all 2^N - 2 subsets of cut bound^2 ),
// compared against the GME threshold when local dimensions are equal.
struct BoundReport {
    std::vector<CutBound> cuts;                 // ascending mask order
    double lc_n = 0.0;
    std::optional<ThresholdValue> threshold;    // absent for mixed local dims or N < 3
    std::optional<Verdict> verdict;             // gme_certified iff lc_n > threshold
    bool separable_consistent = false;          // lc_n == 0 (consistent with, not
                                                // proof of, full separability)

    // Classification view: reports fully-separable-consistent when lc_n == 0,
    // otherwise the verdict (undecided when no threshold is available).
    Verdict classification() const;
};

BoundReport proposition_lower_bound(const DensityMatrix& rho);

// Detection pipeline: requires N >= 3 and equal local dimensions, so the
// report always carries a threshold and verdict. The criterion is one-sided;
// "undecided" never asserts separability.
BoundReport gme_detect(const DensityMatrix& rho);

// lc_n(x) - threshold sampled over x in [0,1]; sign-change brackets refined
// by bisection. detection_threshold is the smallest crossing.
struct ScanResult {
    std::string family_id;
    std::vector<std::pair<double, double>> samples;   // (x, lc_n), x strictly increasing
    double threshold = 0.0;
    std::optional<double> detection_threshold;
    std::vector<std::pair<double, double>> crossing_brackets;
    double lc_at_0 = 0.0;   // endpoint diagnostics for the no-crossing case
    double lc_at_1 = 0.0;
};

ScanResult scan_family(const NoisyFamily& family, int grid, double refine = 1e-6);

// Closed-form published lower bounds for the white-noise GHZ family,
// clamped at zero:
//   zhao: sqrt(3/2) (1-3x)/(1+3x)
//   gao:  -1/2 + (3-3x)/4 + (2-2x+x^2)/(4 sqrt(2))
double zhao_ghz_closed_form(double x);
double gao_ghz_closed_form(double x);

struct ComparisonRow {
    double x = 0.0;
    double zhao = 0.0;
    double gao = 0.0;
    double lc = 0.0;   // pipeline lower bound on the same family
};

struct ComparisonCurve {
    std::vector<ComparisonRow> rows;
    std::optional<double> crossover_zhao_gao;
    std::optional<double> crossover_lc_gao;
    std::optional<double> crossover_lc_zhao;
};

// Both closed forms and the pipeline bound for the white-noise GHZ family on
// a uniform grid, with the first crossover abscissa of each pair of curves.
ComparisonCurve compare_bounds_curve(int grid);

// Exact two-qubit mixed-state concurrence max(0, mu1 - mu2 - mu3 - mu4),
// the mu_i being the ordered square roots of the spectrum of
// rho (sy x sy) rho* (sy x sy).
double two_qubit_concurrence(const DensityMatrix& rho);

} // namespace gmecert
