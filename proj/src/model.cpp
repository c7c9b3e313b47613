#include "picite/model.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace picite {

CitationCurve CitationCurve::from_counts(std::vector<std::int64_t> raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) {
            throw ValidationError("citation count at index " + std::to_string(i) +
                                  " is negative (" + std::to_string(raw[i]) + ")");
        }
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    CitationCurve curve;
    curve.counts_ = std::move(raw);
    return curve;
}

CitationCurve AuthorRecord::curve() const {
    std::vector<std::int64_t> counts;
    counts.reserve(papers.size());
    for (const auto& paper : papers) counts.push_back(paper.citation_count);
    return CitationCurve::from_counts(std::move(counts));
}

std::int64_t AuthorRecord::citation_total() const {
    std::int64_t total = 0;
    for (const auto& paper : papers) total += paper.citation_count;
    return total;
}

bool AuthorRecord::has_tag(const std::string& tag) const {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

void validate_author(const AuthorRecord& author) {
    if (author.author_id.empty()) throw ValidationError("author_id must be non-empty");
    for (std::size_t i = 0; i < author.papers.size(); ++i) {
        const auto& paper = author.papers[i];
        if (paper.citation_count < 0) {
            throw ValidationError("author " + author.author_id + ": papers[" +
                                  std::to_string(i) + "].citation_count is negative");
        }
        if (author.first_year && paper.year && *paper.year < *author.first_year) {
            throw ValidationError("author " + author.author_id + ": papers[" +
                                  std::to_string(i) + "].year " + std::to_string(*paper.year) +
                                  " precedes first_year " + std::to_string(*author.first_year));
        }
    }
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::random_sample: return "random_sample";
        case Provenance::most_productive: return "most_productive";
        case Provenance::top_h: return "top_h";
        case Provenance::file: return "file";
        case Provenance::synthetic: return "synthetic";
    }
    return "unknown";
}

const char* to_string(ReportSource s) {
    return s == ReportSource::counts ? "counts" : "graph";
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
core_tail_split(const CitationCurve& curve, std::int64_t h) {
    const auto& counts = curve.counts();
    const auto p = curve.paper_count();
    // These three checks characterize h = h_index exactly on a sorted curve.
    const bool in_range = h >= 0 && h <= p;
    const bool core_ok = h == 0 || counts[static_cast<std::size_t>(h - 1)] >= h;
    const bool tail_ok = h == p || counts[static_cast<std::size_t>(h)] <= h;
    if (!in_range || !core_ok || !tail_ok) {
        throw InternalError("h=" + std::to_string(h) +
                            " is not the h-index of a curve with p=" + std::to_string(p));
    }
    std::vector<std::int64_t> core(counts.begin(), counts.begin() + h);
    std::vector<std::int64_t> tail(counts.begin() + h, counts.end());
    return {std::move(core), std::move(tail)};
}

}  // namespace picite
