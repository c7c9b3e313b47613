#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "picite/model.hpp"

namespace picite {

struct GraphPaper {
    std::string paper_id;
    std::set<std::string> author_ids;        // never empty
    std::set<std::string> cited_paper_ids;   // outgoing edges, deduplicated

    bool operator==(const GraphPaper&) const = default;
};

// Papers with author lists and directed citation edges. Edges may point at
// papers outside the graph; those targets are simply never counted, because
// classifying a citation needs both ends' author lists.
class CitationGraph {
public:
    // Validates: unique paper_id, non-empty author set, no self-loop.
    void add_paper(GraphPaper paper);

    const GraphPaper* find(const std::string& paper_id) const;
    std::size_t size() const { return papers_.size(); }
    const std::map<std::string, GraphPaper>& papers() const { return papers_; }

    // All author ids appearing in the graph, sorted.
    std::vector<std::string> author_ids() const;

private:
    std::map<std::string, GraphPaper> papers_;
};

// True iff the citing and cited papers share at least one author.
bool is_self_citation(const GraphPaper& citing, const GraphPaper& cited);

struct PaperCitationCounts {
    std::int64_t with_self = 0;
    std::int64_t without_self = 0;
};

// Citation counts for every paper in the graph; each in-graph citing paper
// counts once per target regardless of how often the edge was listed.
std::map<std::string, PaperCitationCounts> per_paper_citation_counts(const CitationGraph& graph);

// Citation-count curve for one author: one entry per paper they authored,
// counting distinct in-graph citing papers (self-citations dropped when
// include_self is false). Unknown author throws NotFoundError.
CitationCurve curve_for_author(const CitationGraph& graph, const std::string& author_id,
                               bool include_self);

}  // namespace picite
