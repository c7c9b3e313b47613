#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "picite/model.hpp"
#include "picite/selfcite.hpp"

namespace picite {

// Authors file: a JSON header line, then one author object per line.
//   {"format":"picite-authors","version":1,"cohort":"...","reference_year":2013}
//   {"author_id":"a1","name":"...","first_year":1995,"tags":["cs"],
//    "papers":[{"paper_id":"p1","citation_count":29,"year":1996}, ...]}
// A zero-length file is a valid empty cohort. Errors carry line numbers.
Cohort load_authors(const std::filesystem::path& path);
Cohort parse_authors(std::istream& in, const std::string& source_name);

void write_authors(const Cohort& cohort, std::ostream& out);
std::string authors_file_text(const Cohort& cohort);

// Graph file: same layout with a picite-graph header, then
//   {"paper_id":"x","author_ids":["a"],"cited_paper_ids":["y","z"]}
CitationGraph load_graph(const std::filesystem::path& path);
CitationGraph parse_graph(std::istream& in, const std::string& source_name);

// Uniform sample without replacement from the eligible authors (>= min_pubs
// papers, >= min_cites citations, carrying require_tag when given).
// Reproducible from the seed; the PRNG and the rejection-sampled bounded
// draw are pinned so identical seeds match across platforms.
Cohort build_random_cohort(const Cohort& corpus, std::size_t n = 500,
                           std::int64_t min_pubs = 10, std::int64_t min_cites = 1,
                           std::uint64_t seed = 0,
                           const std::optional<std::string>& require_tag = std::nullopt);

// Top n by paper count (resp. by h-index); ties broken by author_id.
Cohort build_productive_cohort(const Cohort& corpus, std::size_t n);
Cohort build_top_h_cohort(const Cohort& corpus, std::size_t n);

struct CohortSummary {
    std::size_t author_count = 0;
    std::int64_t publication_total = 0;
    std::int64_t citation_total = 0;
    std::optional<double> mean_publications;
    std::optional<double> mean_citations;
    std::optional<std::int64_t> min_publications;
    std::optional<std::int64_t> max_publications;
    std::optional<std::int64_t> min_citations;
    std::optional<std::int64_t> max_citations;
};

CohortSummary cohort_summary(const Cohort& cohort);

// Output table formats shared by every subcommand.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Gnuplot-style: `#` comment lines, a `#`-prefixed column header, then
// whitespace-separated rows.
void write_plot_data(std::ostream& out, const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows);

}  // namespace picite
