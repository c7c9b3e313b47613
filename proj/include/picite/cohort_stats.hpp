#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picite/model.hpp"

namespace picite {

enum class Metric { h, citations, citations_per_paper, pi, xpi, m, pc };

const char* metric_name(Metric metric);

// Accepts the display names: h, C, C/p (alias cpp), PI, XPI, m, PC.
std::optional<Metric> metric_from_name(const std::string& name);

// One author's value under a metric; absent when the metric is undefined for
// them (m without years, C/p with no papers).
struct MetricValue {
    std::string author_id;
    std::optional<double> value;
};

std::optional<double> metric_value(const AuthorRecord& author, Metric metric,
                                   const PiParams& params, std::optional<int> reference_year);

struct RankRow {
    std::string author_id;
    std::optional<double> value;  // absent values rank last and stay flagged
    int position = 0;             // 1-based
};

struct RankTable {
    std::string metric;
    std::vector<RankRow> rows;  // ordered by position
};

// Rows sorted by value descending; ties broken by author_id so permuting the
// cohort never changes the result. Authors with an undefined metric go last.
RankTable rank_table(const Cohort& cohort, Metric metric, const PiParams& params = {});

RankTable rank_table_from_values(std::string metric, std::vector<MetricValue> values);

struct RankChange {
    std::string author_id;
    int delta = 0;  // position in a minus position in b; positive = ranks better under b
};

// Requires the same author set in both tables; a mismatch throws
// ValidationError listing the symmetric difference. Output follows a's order.
std::vector<RankChange> change_column(const RankTable& a, const RankTable& b);

struct QqPoint {
    std::string author_id;
    double x_pct = 0.0;  // 100 * position / N under metric_x
    double y_pct = 0.0;
};

// Normalized rank positions for plotting one metric against another.
std::vector<QqPoint> qq_data(const Cohort& cohort, Metric metric_x, Metric metric_y,
                             const PiParams& params = {});

std::vector<QqPoint> qq_from_tables(const RankTable& x, const RankTable& y);

enum class CorrelationKind { spearman, kendall };

// Rank correlation of the two position vectors. Absent when either metric
// carries no information (every author tied). Requires >= 3 authors.
std::optional<double> rank_correlation(const Cohort& cohort, Metric metric_x, Metric metric_y,
                                       const PiParams& params = {},
                                       CorrelationKind kind = CorrelationKind::spearman);

std::optional<double> rank_correlation(const RankTable& x, const RankTable& y,
                                       CorrelationKind kind = CorrelationKind::spearman);

struct SignCount {
    std::int64_t negative = 0;
    std::int64_t nonnegative = 0;
    double pct_negative = 0.0;
    double pct_nonnegative = 0.0;
};

struct SignRow {
    std::string cohort;
    std::int64_t kappa = 1;
    SignCount counts;
};

// Per cohort and per kappa: how many authors fall below zero and at-or-above
// zero under PI or XPI (lambda = mu = nu = 1). A final set of rows labelled
// "unioned" counts each author_id once across all cohorts.
struct SignTable {
    Metric metric = Metric::pi;
    std::vector<std::int64_t> kappas;
    std::vector<SignRow> rows;
};

SignTable sign_table(const std::vector<Cohort>& cohorts, Metric metric,
                     const std::vector<std::int64_t>& kappa_values);

enum class DistMode { cdf, pdf };

struct Binning {
    int bins = 20;  // equal-width bins over the observed range (pdf mode)
};

struct DistPoint {
    double x = 0.0;      // evaluation point (cdf) or left bin edge (pdf)
    double value = 0.0;  // cumulative fraction (cdf) or bin fraction (pdf)
};

// Empirical distribution of a metric over a cohort. Authors with an
// undefined metric are skipped. cdf: fraction with value <= x at every
// distinct observed value. pdf: fraction per bin; bins cover [min, max] and
// the fractions sum to 1.
std::vector<DistPoint> distribution(const Cohort& cohort, Metric metric, DistMode mode,
                                    Binning binning = {}, const PiParams& params = {});

struct KappaSweepEntry {
    std::int64_t kappa = 1;
    SignCount signs;
    std::vector<DistPoint> cdf;
    std::vector<DistPoint> pdf;
};

// sign table + distributions for each kappa in turn (lambda = mu = nu = 1).
std::vector<KappaSweepEntry> kappa_sweep(const Cohort& cohort, Metric metric,
                                         const std::vector<std::int64_t>& kappa_values = {1, 2, 4},
                                         Binning binning = {});

}  // namespace picite
