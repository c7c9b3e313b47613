// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "picite/cli.hpp"
#include "picite/cohort_stats.hpp"
#include "picite/indices.hpp"
#include "picite/ingest.hpp"
#include "picite/selfcite.hpp"
#include "picite/synth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace picite;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

// ---- 1: exact index values for the bundled two-author example -------------------------

void criterion_example_pair(Check& check) {
    struct Expected {
        std::vector<std::int64_t> counts;
        std::int64_t p, c, h, c_t, c_e, c_h, c_tc, pi, c_ic, xpi;
    };
    const std::vector<Expected> cases{
        {oracle::author_a_counts(), 13, 177, 10, 12, 65, 165, 18, 147, 33, 144},
        {oracle::author_b_counts(), 24, 177, 10, 12, 65, 165, 128, 37, 404, -227},
    };
    for (const auto& expected : cases) {
        const auto curve = CitationCurve::from_counts(expected.counts);
        const auto report = compute_report(curve);
        check.expect(report.papers == expected.p, "p mismatch");
        check.expect(report.citations == expected.c, "C mismatch");
        check.expect(report.h == expected.h, "h mismatch");
        check.expect(report.tail_citations == expected.c_t, "C_T mismatch");
        check.expect(report.excess_citations == expected.c_e, "C_E mismatch");
        check.expect(report.core_citations == expected.c_h, "C_H mismatch");
        check.expect(report.tail_complement == expected.c_tc, "C_TC mismatch");
        check.expect(report.pi == expected.pi, "PI mismatch");
        check.expect(report.ideal_complement == expected.c_ic, "C_IC mismatch");
        check.expect(report.xpi == expected.xpi, "XPI mismatch");
    }
}

// ---- 2: parameterized-count reductions --------------------------------------

void criterion_pc_reductions(Check& check) {
    std::mt19937 rng(9001);
    for (int i = 0; i < 1200; ++i) {
        const auto raw = oracle::random_counts(rng, 60, 90);
        const auto curve = CitationCurve::from_counts(raw);
        const auto areas = oracle::brute_areas(raw);
        check.expect(parameterized_count(curve, 1, 1, 1) == areas.citations, "PC(1,1,1) != C");
        check.expect(parameterized_count(curve, 1, 0, 0) == areas.h * areas.h,
                     "PC(1,0,0) != h^2");
        check.expect(parameterized_count(curve, 0, 1, 0) == areas.excess, "PC(0,1,0) != C_E");
        check.expect(parameterized_count(curve, 0, 0, 1) == areas.tail, "PC(0,0,1) != C_T");
    }
}

// ---- 3: tail-complement identity, two independent routes ---------------------

void criterion_tail_identity(Check& check) {
    std::mt19937 rng(9002);
    for (int i = 0; i < 2000; ++i) {
        const auto raw = oracle::random_counts(rng, 70, 100);
        const auto term_wise = tail_complement(CitationCurve::from_counts(raw));
        check.expect(term_wise == oracle::closed_form_tail_complement(raw),
                     "term-wise C_TC != h(p-h) - C_T");
    }
}

// ---- 4: PI monotonicity under single-paper edits -----------------------------

void criterion_monotonicity(Check& check) {
    std::mt19937 rng(9003);
    int tail_bumps = 0;
    for (int i = 0; i < 2000; ++i) {
        auto raw = oracle::random_counts(rng, 50, 60);
        const auto before = CitationCurve::from_counts(raw);
        const auto h = h_index(before);
        const auto pi_before = perfectionism_index(before);
        const auto areas_before = curve_areas(before);

        auto appended = raw;
        appended.push_back(0);
        const auto after_append = CitationCurve::from_counts(appended);
        check.expect(h_index(after_append) == h, "append changed h");
        check.expect(curve_areas(after_append).core_citations == areas_before.core_citations,
                     "append changed C_H");
        check.expect(curve_areas(after_append).excess_citations == areas_before.excess_citations,
                     "append changed C_E");
        check.expect(perfectionism_index(after_append) == pi_before - h,
                     "append did not shift PI by -h");

        for (std::size_t j = 0; j < raw.size(); ++j) {
            if (raw[j] + 1 < h) {
                auto bumped = raw;
                bumped[j] += 1;
                const auto after_bump = CitationCurve::from_counts(bumped);
                check.expect(perfectionism_index(after_bump) == pi_before + 1,
                             "tail bump did not shift PI by +1");
                ++tail_bumps;
                break;
            }
        }
    }
    check.expect(tail_bumps > 500, "too few curves exercised the tail bump");
}

// ---- 5: h-index vs the definition scan ---------------------------------------

void criterion_h_oracle(Check& check) {
    std::mt19937 rng(9004);
    for (int i = 0; i < 10000; ++i) {
        const auto raw = oracle::random_counts(rng, 50, 75);
        check.expect(h_index(CitationCurve::from_counts(raw)) == oracle::brute_h(raw),
                     "h-index disagrees with the definition scan");
    }
}

// ---- 6: kappa sweep direction -------------------------------------------------

void criterion_kappa_direction(Check& check) {
    std::mt19937 rng(9005);
    for (int trial = 0; trial < 20; ++trial) {
        Cohort cohort;
        cohort.name = "trial";
        const std::size_t n = 100 + static_cast<std::size_t>(trial) * 20;
        for (std::size_t i = 0; i < n; ++i) {
            cohort.authors.push_back(oracle::make_author("a" + std::to_string(i),
                                                         oracle::random_counts(rng, 40, 50)));
        }
        const auto table = sign_table({cohort}, Metric::pi, {1, 2, 4});
        std::int64_t previous = -1;
        for (const auto& row : table.rows) {
            if (row.cohort != cohort.name) continue;
            check.expect(row.counts.nonnegative >= previous,
                         "PI >=0 count decreased along kappa 1 -> 2 -> 4");
            previous = row.counts.nonnegative;
        }
    }
}

// ---- 7: productive vs top-h contrast at desk scale ----------------------------

// 5000-author power-law corpus: a large low-impact class and a smaller
// high-impact class, merged. Parameters are frozen here.
Cohort contrast_corpus(std::uint64_t seed) {
    SynthSpec bulk;
    bulk.n_authors = 4000;
    bulk.papers = {10, 600};
    bulk.citation_exponent = 3.0;
    bulk.max_citations = 2000;
    bulk.seed = seed;
    bulk.id_prefix = "L";
    SynthSpec elite;
    elite.n_authors = 1000;
    elite.papers = {10, 200};
    elite.citation_exponent = 1.7;
    elite.max_citations = 20000;
    elite.seed = seed ^ 0x9E3779B97F4A7C15ULL;
    elite.id_prefix = "H";
    auto corpus = generate_cohort(bulk);
    auto extra = generate_cohort(elite);
    corpus.authors.insert(corpus.authors.end(),
                          std::make_move_iterator(extra.authors.begin()),
                          std::make_move_iterator(extra.authors.end()));
    corpus.name = "contrast";
    return corpus;
}

double fraction_negative_pi(const Cohort& cohort) {
    std::int64_t negative = 0;
    for (const auto& author : cohort.authors) {
        if (perfectionism_index(author.curve()) < 0) ++negative;
    }
    return static_cast<double>(negative) / static_cast<double>(cohort.size());
}

void criterion_cohort_contrast(Check& check) {
    int wins = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto corpus = contrast_corpus(seed);
        const auto productive = build_productive_cohort(corpus, 500);
        const auto top_h = build_top_h_cohort(corpus, 500);
        if (fraction_negative_pi(productive) > fraction_negative_pi(top_h)) ++wins;
    }
    check.expect(wins >= 95, "productive > top-h held in only " + std::to_string(wins) +
                                 " of 100 seeds");
}

// ---- 8: self-citation monotonicity --------------------------------------------

void criterion_selfcite(Check& check) {
    std::mt19937 rng(9006);
    for (int i = 0; i < 1000; ++i) {
        const auto graph = oracle::random_graph(rng, 20, 8);
        for (const auto& [id, counts] : per_paper_citation_counts(graph)) {
            check.expect(counts.without_self <= counts.with_self,
                         "excluding self-citations raised a per-paper count");
        }
        for (const auto& author_id : graph.author_ids()) {
            const auto with = curve_for_author(graph, author_id, true);
            const auto without = curve_for_author(graph, author_id, false);
            check.expect(h_index(without) <= h_index(with),
                         "excluding self-citations raised h");
            check.expect(curve_areas(without).citations <= curve_areas(with).citations,
                         "excluding self-citations raised C");
        }
    }

    // toy fixture: X by {a} cited by Y (by {a}) and Z (by {b})
    CitationGraph toy;
    toy.add_paper({"X", {"a"}, {}});
    toy.add_paper({"Y", {"a"}, {"X"}});
    toy.add_paper({"Z", {"b"}, {"X"}});
    const auto with = curve_for_author(toy, "a", true);
    const auto without = curve_for_author(toy, "a", false);
    check.expect(with.counts() == std::vector<std::int64_t>{2, 0}, "toy with-self curve");
    check.expect(without.counts() == std::vector<std::int64_t>{1, 0}, "toy no-self curve");
    check.expect(h_index(with) == 1 && h_index(without) == 1, "toy h values");
    check.expect(perfectionism_index(with) == 1 && perfectionism_index(without) == 0,
                 "toy PI values");
}

// ---- 9: statistics sanity -------------------------------------------------------

void criterion_stats_sanity(Check& check) {
    std::mt19937 rng(9007);
    Cohort cohort;
    cohort.name = "sanity";
    for (int i = 0; i < 240; ++i) {
        cohort.authors.push_back(oracle::make_author("s" + std::to_string(i),
                                                     oracle::random_counts(rng, 35, 45)));
    }

    const auto cdf = distribution(cohort, Metric::pi, DistMode::cdf);
    double previous = 0.0;
    for (const auto& point : cdf) {
        check.expect(point.value >= previous, "CDF decreased");
        previous = point.value;
    }
    check.expect(previous == 1.0, "CDF does not end at 1");

    const auto pdf = distribution(cohort, Metric::pi, DistMode::pdf);
    double total = 0.0;
    for (const auto& point : pdf) {
        check.expect(point.value >= 0.0, "PDF bin negative");
        total += point.value;
    }
    check.expect(std::abs(total - 1.0) <= 1e-9, "PDF does not sum to 1 within 1e-9");

    const auto table = rank_table(cohort, Metric::pi);
    std::set<int> positions;
    for (const auto& row : table.rows) positions.insert(row.position);
    check.expect(positions.size() == cohort.size() && *positions.begin() == 1 &&
                     *positions.rbegin() == static_cast<int>(cohort.size()),
                 "rank positions are not a permutation of 1..N");

    const auto by_h = rank_table(cohort, Metric::h);
    std::int64_t sum = 0;
    for (const auto& change : change_column(by_h, table)) sum += change.delta;
    check.expect(sum == 0, "change column does not sum to 0");

    std::vector<MetricValue> distinct;
    for (int i = 0; i < 50; ++i) {
        distinct.push_back({"d" + std::to_string(i), static_cast<double>(i * i)});
    }
    const auto self_table = rank_table_from_values("v", distinct);
    const auto rho = rank_correlation(self_table, self_table);
    check.expect(rho.has_value() && *rho == 1.0, "Spearman self-correlation is not exactly 1");
}

// ---- 10: determinism of seeded commands ------------------------------------------

int run_cli_args(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("picite");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

void criterion_determinism(Check& check) {
    fixture::TempDir dir;
    const auto out1 = (dir.path() / "s1.jsonl").string();
    const auto out2 = (dir.path() / "s2.jsonl").string();
    for (const auto& out : {out1, out2}) {
        const int rc = run_cli_args({"synth", "--authors", "200", "--papers", "5:60",
                                     "--exponent", "2.5", "--seed", "31415", "--output", out});
        check.expect(rc == 0, "synth exited nonzero");
    }
    const auto text1 = fixture::TempDir::slurp(out1);
    check.expect(!text1.empty(), "synth produced no output");
    check.expect(text1 == fixture::TempDir::slurp(out2), "synth runs differ byte-wise");

    std::mt19937 rng(9008);
    Cohort corpus;
    corpus.name = "corpus";
    for (int i = 0; i < 400; ++i) {
        corpus.authors.push_back(oracle::make_author("c" + std::to_string(i),
                                                     oracle::random_counts(rng, 25, 30)));
    }
    const auto sample1 = build_random_cohort(corpus, 50, 0, 0, 2718);
    const auto sample2 = build_random_cohort(corpus, 50, 0, 0, 2718);
    check.expect(sample1 == sample2, "build_random_cohort runs differ");
    check.expect(authors_file_text(sample1) == authors_file_text(sample2),
                 "serialized random cohorts differ byte-wise");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
    double time_limit_s;  // 0 = no stated limit
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "example-pair-exact-values", criterion_example_pair, 1.0},
        {2, "pc-reduction-suite", criterion_pc_reductions, 5.0},
        {3, "tail-complement-identity", criterion_tail_identity, 0.0},
        {4, "pi-monotonicity", criterion_monotonicity, 0.0},
        {5, "h-index-brute-force", criterion_h_oracle, 0.0},
        {6, "kappa-sweep-direction", criterion_kappa_direction, 0.0},
        {7, "productive-vs-top-h-contrast", criterion_cohort_contrast, 60.0},
        {8, "self-citation-monotonicity", criterion_selfcite, 0.0},
        {9, "statistics-sanity", criterion_stats_sanity, 0.0},
        {10, "seeded-determinism", criterion_determinism, 0.0},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_s > 0.0 && elapsed > criterion.time_limit_s) {
            check.expect(false, "exceeded " + std::to_string(criterion.time_limit_s) + "s");
        }
        std::ostringstream line;
        line << (check.ok ? "PASS" : "FAIL") << "  " << criterion.id << "  " << criterion.name
             << "  (" << elapsed << "s)";
        if (!check.ok) line << "  -- " << check.detail;
        std::cout << line.str() << std::endl;
        if (!check.ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "all " << criteria.size() << " acceptance criteria passed" << std::endl;
    }
    return failures;
}
