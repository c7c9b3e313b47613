#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "picite/errors.hpp"

namespace picite {

// An author's citation counts, one entry per paper, kept sorted in
// non-increasing order. Every index formula consumes this form; rank order
// among equal counts never matters (all formulas are multiset functions).
class CitationCurve {
public:
    CitationCurve() = default;

    // Validates entries (>= 0) and sorts descending. Input order is irrelevant.
    static CitationCurve from_counts(std::vector<std::int64_t> raw);

    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t paper_count() const { return static_cast<std::int64_t>(counts_.size()); }
    bool empty() const { return counts_.empty(); }

    bool operator==(const CitationCurve&) const = default;

private:
    std::vector<std::int64_t> counts_;
};

struct PaperRecord {
    std::string paper_id;
    std::int64_t citation_count = 0;
    std::optional<int> year;

    bool operator==(const PaperRecord&) const = default;
};

struct AuthorRecord {
    std::string author_id;
    std::string name;
    std::vector<PaperRecord> papers;
    std::optional<int> first_year;
    std::vector<std::string> tags;

    CitationCurve curve() const;
    std::int64_t paper_count() const { return static_cast<std::int64_t>(papers.size()); }
    std::int64_t citation_total() const;
    bool has_tag(const std::string& tag) const;

    bool operator==(const AuthorRecord&) const = default;
};

// Checks author_id non-empty, counts non-negative and first_year <= every
// paper year that is present. Throws ValidationError.
void validate_author(const AuthorRecord& author);

enum class Provenance { random_sample, most_productive, top_h, file, synthetic };

const char* to_string(Provenance p);

struct Cohort {
    std::string name;
    std::vector<AuthorRecord> authors;
    Provenance provenance = Provenance::file;
    std::string provenance_params;       // free text, e.g. "n=500 seed=7"
    std::optional<int> reference_year;   // snapshot year used by the m-quotient

    std::size_t size() const { return authors.size(); }

    bool operator==(const Cohort&) const = default;
};

// Multipliers for the parameterized count and the perfectionism indices.
struct PiParams {
    std::int64_t kappa = 1;
    std::int64_t lambda = 1;
    std::int64_t mu = 1;
    std::int64_t nu = 1;

    bool operator==(const PiParams&) const = default;
};

enum class ReportSource { counts, graph };

const char* to_string(ReportSource s);

// Every index and area computed for one author under one parameter setting.
struct IndexReport {
    std::int64_t h = 0;
    std::int64_t papers = 0;             // p
    std::int64_t tail_papers = 0;        // p_T = p - h
    std::int64_t citations = 0;          // C
    std::int64_t core_citations = 0;     // C_H, sum of the top-h entries
    std::int64_t excess_citations = 0;   // C_E = C_H - h^2
    std::int64_t tail_citations = 0;     // C_T = C - C_H
    std::int64_t tail_complement = 0;    // C_TC
    std::int64_t ideal_complement = 0;   // C_IC
    std::int64_t pc = 0;
    std::int64_t pi = 0;
    std::int64_t xpi = 0;
    std::optional<double> m;             // h over career span; needs years
    std::optional<double> a;             // C / h^2; absent when h = 0
    std::optional<double> r;             // sqrt(C_H)
    std::optional<double> cpp;           // C / p; absent when p = 0
    PiParams params;
    ReportSource source = ReportSource::counts;
};

// Splits a curve into its core (first h entries, P_H) and tail (remaining
// p - h entries, P_T). `h` must be the curve's h-index; an inconsistent
// value throws InternalError.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
core_tail_split(const CitationCurve& curve, std::int64_t h);

}  // namespace picite
