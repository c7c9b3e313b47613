#include "picite/cohort_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "picite/indices.hpp"

namespace picite {

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::h: return "h";
        case Metric::citations: return "C";
        case Metric::citations_per_paper: return "C/p";
        case Metric::pi: return "PI";
        case Metric::xpi: return "XPI";
        case Metric::m: return "m";
        case Metric::pc: return "PC";
    }
    return "unknown";
}

std::optional<Metric> metric_from_name(const std::string& name) {
    if (name == "h") return Metric::h;
    if (name == "C") return Metric::citations;
    if (name == "C/p" || name == "cpp") return Metric::citations_per_paper;
    if (name == "PI") return Metric::pi;
    if (name == "XPI") return Metric::xpi;
    if (name == "m") return Metric::m;
    if (name == "PC") return Metric::pc;
    return std::nullopt;
}

std::optional<double> metric_value(const AuthorRecord& author, Metric metric,
                                   const PiParams& params, std::optional<int> reference_year) {
    const auto curve = author.curve();
    switch (metric) {
        case Metric::h:
            return static_cast<double>(h_index(curve));
        case Metric::citations:
            return static_cast<double>(author.citation_total());
        case Metric::citations_per_paper:
            return citations_per_paper(author.citation_total(), author.paper_count());
        case Metric::pi:
            return static_cast<double>(perfectionism_index(curve, params));
        case Metric::xpi:
            return static_cast<double>(extreme_perfectionism_index(curve, params));
        case Metric::m:
            if (!author.first_year || !reference_year) return std::nullopt;
            return m_quotient(h_index(curve), *author.first_year, *reference_year);
        case Metric::pc:
            return static_cast<double>(
                parameterized_count(curve, params.kappa, params.lambda, params.mu));
    }
    return std::nullopt;
}

RankTable rank_table_from_values(std::string metric, std::vector<MetricValue> values) {
    if (values.empty()) throw ValidationError("cannot rank an empty cohort");
    std::sort(values.begin(), values.end(), [](const MetricValue& a, const MetricValue& b) {
        if (a.value.has_value() != b.value.has_value()) return a.value.has_value();
        if (a.value && b.value && *a.value != *b.value) return *a.value > *b.value;
        return a.author_id < b.author_id;
    });
    RankTable table;
    table.metric = std::move(metric);
    table.rows.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        table.rows.push_back({std::move(values[i].author_id), values[i].value,
                              static_cast<int>(i) + 1});
    }
    return table;
}

RankTable rank_table(const Cohort& cohort, Metric metric, const PiParams& params) {
    std::vector<MetricValue> values;
    values.reserve(cohort.authors.size());
    for (const auto& author : cohort.authors) {
        values.push_back({author.author_id,
                          metric_value(author, metric, params, cohort.reference_year)});
    }
    return rank_table_from_values(metric_name(metric), std::move(values));
}

namespace {

std::map<std::string, int> position_map(const RankTable& table) {
    std::map<std::string, int> positions;
    for (const auto& row : table.rows) positions.emplace(row.author_id, row.position);
    return positions;
}

void require_same_authors(const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
    std::vector<std::string> only_a;
    std::vector<std::string> only_b;
    for (const auto& [id, pos] : a) {
        if (b.count(id) == 0) only_a.push_back(id);
    }
    for (const auto& [id, pos] : b) {
        if (a.count(id) == 0) only_b.push_back(id);
    }
    if (only_a.empty() && only_b.empty()) return;
    std::ostringstream msg;
    msg << "rank tables cover different authors;";
    auto list = [&msg](const char* label, const std::vector<std::string>& ids) {
        if (ids.empty()) return;
        msg << ' ' << label;
        for (std::size_t i = 0; i < ids.size() && i < 10; ++i) msg << ' ' << ids[i];
        if (ids.size() > 10) msg << " (+" << ids.size() - 10 << " more)";
        msg << ';';
    };
    list("only in first:", only_a);
    list("only in second:", only_b);
    throw ValidationError(msg.str());
}

}  // namespace

std::vector<RankChange> change_column(const RankTable& a, const RankTable& b) {
    const auto pos_a = position_map(a);
    const auto pos_b = position_map(b);
    require_same_authors(pos_a, pos_b);
    std::vector<RankChange> changes;
    changes.reserve(a.rows.size());
    for (const auto& row : a.rows) {
        changes.push_back({row.author_id, row.position - pos_b.at(row.author_id)});
    }
    return changes;
}

std::vector<QqPoint> qq_from_tables(const RankTable& x, const RankTable& y) {
    const auto pos_x = position_map(x);
    const auto pos_y = position_map(y);
    require_same_authors(pos_x, pos_y);
    const auto n = static_cast<double>(pos_x.size());
    std::vector<QqPoint> points;
    points.reserve(pos_x.size());
    for (const auto& [id, px] : pos_x) {
        points.push_back({id, 100.0 * px / n, 100.0 * pos_y.at(id) / n});
    }
    return points;
}

std::vector<QqPoint> qq_data(const Cohort& cohort, Metric metric_x, Metric metric_y,
                             const PiParams& params) {
    if (cohort.authors.size() < 2) {
        throw ValidationError("q-q data needs a cohort of at least 2 authors");
    }
    return qq_from_tables(rank_table(cohort, metric_x, params),
                          rank_table(cohort, metric_y, params));
}

namespace {

// A table carries no ranking information when every author shares one value
// state (all equal, or all undefined).
bool all_tied(const RankTable& table) {
    std::set<std::optional<double>> states;
    for (const auto& row : table.rows) states.insert(row.value);
    return states.size() <= 1;
}

}  // namespace

std::optional<double> rank_correlation(const RankTable& x, const RankTable& y,
                                       CorrelationKind kind) {
    const auto pos_x = position_map(x);
    const auto pos_y = position_map(y);
    require_same_authors(pos_x, pos_y);
    const auto n = static_cast<std::int64_t>(pos_x.size());
    if (n < 3) throw ValidationError("rank correlation needs at least 3 authors");
    if (all_tied(x) || all_tied(y)) return std::nullopt;

    if (kind == CorrelationKind::spearman) {
        // Positions are tie-broken permutations of 1..N, so the closed form
        // 1 - 6*sum(d^2)/(n(n^2-1)) is exact.
        std::int64_t d2 = 0;
        for (const auto& [id, px] : pos_x) {
            const std::int64_t d = px - pos_y.at(id);
            d2 += d * d;
        }
        return 1.0 - 6.0 * static_cast<double>(d2) /
                         (static_cast<double>(n) * (static_cast<double>(n) * n - 1.0));
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pos_x.size());
    for (const auto& [id, px] : pos_x) pairs.emplace_back(px, pos_y.at(id));
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto dx = pairs[i].first - pairs[j].first;
            const auto dy = pairs[i].second - pairs[j].second;
            const auto product = static_cast<std::int64_t>(dx) * dy;
            if (product > 0) ++concordant;
            if (product < 0) ++discordant;
        }
    }
    return static_cast<double>(concordant - discordant) /
           (static_cast<double>(n) * (n - 1) / 2.0);
}

std::optional<double> rank_correlation(const Cohort& cohort, Metric metric_x, Metric metric_y,
                                       const PiParams& params, CorrelationKind kind) {
    if (cohort.authors.size() < 3) {
        throw ValidationError("rank correlation needs at least 3 authors");
    }
    return rank_correlation(rank_table(cohort, metric_x, params),
                            rank_table(cohort, metric_y, params), kind);
}

namespace {

SignCount count_signs(const Cohort& cohort, Metric metric, std::int64_t kappa) {
    SignCount counts;
    const PiParams params{.kappa = kappa, .lambda = 1, .mu = 1, .nu = 1};
    for (const auto& author : cohort.authors) {
        const auto value = metric_value(author, metric, params, cohort.reference_year);
        if (value && *value < 0.0) {
            ++counts.negative;
        } else {
            ++counts.nonnegative;
        }
    }
    const auto total = counts.negative + counts.nonnegative;
    if (total > 0) {
        counts.pct_negative = 100.0 * static_cast<double>(counts.negative) / total;
        counts.pct_nonnegative = 100.0 * static_cast<double>(counts.nonnegative) / total;
    }
    return counts;
}

}  // namespace

SignTable sign_table(const std::vector<Cohort>& cohorts, Metric metric,
                     const std::vector<std::int64_t>& kappa_values) {
    if (metric != Metric::pi && metric != Metric::xpi) {
        throw ValidationError("sign table is defined for PI and XPI only");
    }
    if (cohorts.empty()) throw ValidationError("sign table needs at least one cohort");
    SignTable table;
    table.metric = metric;
    table.kappas = kappa_values;
    for (const auto& cohort : cohorts) {
        for (const auto kappa : kappa_values) {
            table.rows.push_back({cohort.name, kappa, count_signs(cohort, metric, kappa)});
        }
    }
    // The unioned sample counts each author once, keeping the first record
    // seen for an id that appears in several cohorts.
    Cohort unioned;
    unioned.name = "unioned";
    std::set<std::string> seen;
    for (const auto& cohort : cohorts) {
        if (!unioned.reference_year) unioned.reference_year = cohort.reference_year;
        for (const auto& author : cohort.authors) {
            if (seen.insert(author.author_id).second) unioned.authors.push_back(author);
        }
    }
    for (const auto kappa : kappa_values) {
        table.rows.push_back({unioned.name, kappa, count_signs(unioned, metric, kappa)});
    }
    return table;
}

std::vector<DistPoint> distribution(const Cohort& cohort, Metric metric, DistMode mode,
                                    Binning binning, const PiParams& params) {
    if (cohort.authors.empty()) throw ValidationError("distribution needs a non-empty cohort");
    if (binning.bins <= 0) {
        throw ValidationError("bin count must be positive, got " + std::to_string(binning.bins));
    }
    std::vector<double> values;
    values.reserve(cohort.authors.size());
    for (const auto& author : cohort.authors) {
        const auto value = metric_value(author, metric, params, cohort.reference_year);
        if (value) values.push_back(*value);
    }
    if (values.empty()) {
        throw ValidationError(std::string("metric ") + metric_name(metric) +
                              " is undefined for every author in the cohort");
    }
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    std::vector<DistPoint> points;

    if (mode == DistMode::cdf) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            const bool last_of_value = i + 1 == values.size() || values[i + 1] != values[i];
            if (last_of_value) {
                points.push_back({values[i], static_cast<double>(i + 1) / n});
            }
        }
        return points;
    }

    const double lo = values.front();
    const double hi = values.back();
    if (lo == hi) {
        points.push_back({lo, 1.0});
        return points;
    }
    const double width = (hi - lo) / binning.bins;
    std::vector<std::int64_t> bucket(static_cast<std::size_t>(binning.bins), 0);
    for (const auto value : values) {
        auto index = static_cast<std::int64_t>((value - lo) / width);
        index = std::clamp<std::int64_t>(index, 0, binning.bins - 1);
        ++bucket[static_cast<std::size_t>(index)];
    }
    points.reserve(bucket.size());
    for (std::size_t i = 0; i < bucket.size(); ++i) {
        points.push_back({lo + width * static_cast<double>(i),
                          static_cast<double>(bucket[i]) / n});
    }
    return points;
}

std::vector<KappaSweepEntry> kappa_sweep(const Cohort& cohort, Metric metric,
                                         const std::vector<std::int64_t>& kappa_values,
                                         Binning binning) {
    if (metric != Metric::pi && metric != Metric::xpi) {
        throw ValidationError("kappa sweep is defined for PI and XPI only");
    }
    std::vector<KappaSweepEntry> entries;
    entries.reserve(kappa_values.size());
    for (const auto kappa : kappa_values) {
        KappaSweepEntry entry;
        entry.kappa = kappa;
        entry.signs = count_signs(cohort, metric, kappa);
        const PiParams params{.kappa = kappa, .lambda = 1, .mu = 1, .nu = 1};
        entry.cdf = distribution(cohort, metric, DistMode::cdf, binning, params);
        entry.pdf = distribution(cohort, metric, DistMode::pdf, binning, params);
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace picite
