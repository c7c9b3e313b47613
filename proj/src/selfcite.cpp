#include "picite/selfcite.hpp"

#include <algorithm>

namespace picite {

void CitationGraph::add_paper(GraphPaper paper) {
    if (paper.paper_id.empty()) throw ValidationError("paper_id must be non-empty");
    if (paper.author_ids.empty()) {
        throw ValidationError("paper " + paper.paper_id + " has no authors");
    }
    if (paper.cited_paper_ids.count(paper.paper_id) != 0) {
        throw ValidationError("paper " + paper.paper_id + " cites itself");
    }
    auto [it, inserted] = papers_.emplace(paper.paper_id, std::move(paper));
    (void)it;
    if (!inserted) {
        throw ValidationError("duplicate paper_id " + it->first);
    }
}

const GraphPaper* CitationGraph::find(const std::string& paper_id) const {
    auto it = papers_.find(paper_id);
    return it == papers_.end() ? nullptr : &it->second;
}

std::vector<std::string> CitationGraph::author_ids() const {
    std::set<std::string> ids;
    for (const auto& [paper_id, paper] : papers_) {
        ids.insert(paper.author_ids.begin(), paper.author_ids.end());
    }
    return {ids.begin(), ids.end()};
}

bool is_self_citation(const GraphPaper& citing, const GraphPaper& cited) {
    const auto& smaller = citing.author_ids.size() <= cited.author_ids.size()
                              ? citing.author_ids
                              : cited.author_ids;
    const auto& larger = &smaller == &citing.author_ids ? cited.author_ids : citing.author_ids;
    return std::any_of(smaller.begin(), smaller.end(),
                       [&](const std::string& id) { return larger.count(id) != 0; });
}

std::map<std::string, PaperCitationCounts> per_paper_citation_counts(const CitationGraph& graph) {
    std::map<std::string, PaperCitationCounts> counts;
    for (const auto& [paper_id, paper] : graph.papers()) counts.emplace(paper_id, PaperCitationCounts{});
    for (const auto& [citing_id, citing] : graph.papers()) {
        for (const auto& cited_id : citing.cited_paper_ids) {
            const auto* cited = graph.find(cited_id);
            if (cited == nullptr) continue;  // target outside the graph
            auto& entry = counts[cited_id];
            entry.with_self += 1;
            if (!is_self_citation(citing, *cited)) entry.without_self += 1;
        }
    }
    return counts;
}

CitationCurve curve_for_author(const CitationGraph& graph, const std::string& author_id,
                               bool include_self) {
    const auto counts = per_paper_citation_counts(graph);
    std::vector<std::int64_t> own;
    for (const auto& [paper_id, paper] : graph.papers()) {
        if (paper.author_ids.count(author_id) == 0) continue;
        const auto& entry = counts.at(paper_id);
        own.push_back(include_self ? entry.with_self : entry.without_self);
    }
    if (own.empty()) {
        throw NotFoundError("author " + author_id + " appears on no paper in the graph");
    }
    return CitationCurve::from_counts(std::move(own));
}

}  // namespace picite
