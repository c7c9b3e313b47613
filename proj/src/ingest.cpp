#include "picite/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "picite/indices.hpp"

namespace picite {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kAuthorsFormat = "picite-authors";
constexpr const char* kGraphFormat = "picite-graph";
constexpr int kFormatVersion = 1;

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& msg) {
    throw ValidationError(source + ":" + std::to_string(line) + ": " + msg);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

json parse_line(const std::string& source, std::size_t line_no, const std::string& line) {
    json parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
        fail_at(source, line_no, "expected a JSON object");
    }
    return parsed;
}

void check_header(const std::string& source, std::size_t line_no, const json& header,
                  const char* expected_format) {
    if (!header.contains("format") || !header["format"].is_string() ||
        header["format"].get<std::string>() != expected_format) {
        fail_at(source, line_no,
                std::string("expected a header line with format \"") + expected_format + "\"");
    }
    if (!header.contains("version") || !header["version"].is_number_integer() ||
        header["version"].get<int>() != kFormatVersion) {
        fail_at(source, line_no, "unsupported format version");
    }
}

std::string require_string(const std::string& source, std::size_t line_no, const json& obj,
                           const char* field) {
    if (!obj.contains(field) || !obj[field].is_string()) {
        fail_at(source, line_no, std::string("missing or non-string field \"") + field + "\"");
    }
    return obj[field].get<std::string>();
}

std::int64_t require_int(const std::string& source, std::size_t line_no, const json& obj,
                         const char* field) {
    if (!obj.contains(field) || !obj[field].is_number_integer()) {
        fail_at(source, line_no, std::string("missing or non-integer field \"") + field + "\"");
    }
    return obj[field].get<std::int64_t>();
}

AuthorRecord parse_author(const std::string& source, std::size_t line_no, const json& obj) {
    AuthorRecord author;
    author.author_id = require_string(source, line_no, obj, "author_id");
    if (author.author_id.empty()) fail_at(source, line_no, "author_id must be non-empty");
    if (obj.contains("name")) author.name = require_string(source, line_no, obj, "name");
    if (obj.contains("first_year")) {
        author.first_year = static_cast<int>(require_int(source, line_no, obj, "first_year"));
    }
    if (obj.contains("tags")) {
        if (!obj["tags"].is_array()) fail_at(source, line_no, "field \"tags\" must be an array");
        for (const auto& tag : obj["tags"]) {
            if (!tag.is_string()) fail_at(source, line_no, "tags must be strings");
            author.tags.push_back(tag.get<std::string>());
        }
    }
    if (obj.contains("papers")) {
        if (!obj["papers"].is_array()) {
            fail_at(source, line_no, "field \"papers\" must be an array");
        }
        std::size_t index = 0;
        for (const auto& entry : obj["papers"]) {
            if (!entry.is_object()) {
                fail_at(source, line_no, "papers[" + std::to_string(index) + "] must be an object");
            }
            PaperRecord paper;
            paper.paper_id = require_string(source, line_no, entry, "paper_id");
            paper.citation_count = require_int(source, line_no, entry, "citation_count");
            if (paper.citation_count < 0) {
                fail_at(source, line_no,
                        "papers[" + std::to_string(index) + "].citation_count is negative");
            }
            if (entry.contains("year")) {
                paper.year = static_cast<int>(require_int(source, line_no, entry, "year"));
            }
            author.papers.push_back(std::move(paper));
            ++index;
        }
    }
    try {
        validate_author(author);
    } catch (const ValidationError& err) {
        fail_at(source, line_no, err.what());
    }
    return author;
}

}  // namespace

Cohort parse_authors(std::istream& in, const std::string& source_name) {
    Cohort cohort;
    cohort.name = source_name;
    cohort.provenance = Provenance::file;

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    bool header_has_ref_year = false;
    std::set<std::string> seen_ids;
    std::optional<int> max_year;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const auto obj = parse_line(source_name, line_no, line);
        if (!header_seen) {
            check_header(source_name, line_no, obj, kAuthorsFormat);
            if (obj.contains("cohort") && obj["cohort"].is_string()) {
                cohort.name = obj["cohort"].get<std::string>();
            }
            if (obj.contains("reference_year") && obj["reference_year"].is_number_integer()) {
                cohort.reference_year = obj["reference_year"].get<int>();
                header_has_ref_year = true;
            }
            header_seen = true;
            continue;
        }
        auto author = parse_author(source_name, line_no, obj);
        if (!seen_ids.insert(author.author_id).second) {
            fail_at(source_name, line_no, "duplicate author_id \"" + author.author_id + "\"");
        }
        for (const auto& paper : author.papers) {
            if (paper.year && (!max_year || *paper.year > *max_year)) max_year = paper.year;
        }
        cohort.authors.push_back(std::move(author));
    }
    if (!header_has_ref_year && max_year) cohort.reference_year = max_year;
    return cohort;
}

Cohort load_authors(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open authors file " + path.string());
    return parse_authors(in, path.stem().string());
}

void write_authors(const Cohort& cohort, std::ostream& out) {
    ordered_json header;
    header["format"] = kAuthorsFormat;
    header["version"] = kFormatVersion;
    header["cohort"] = cohort.name;
    if (cohort.reference_year) header["reference_year"] = *cohort.reference_year;
    out << header.dump() << '\n';
    for (const auto& author : cohort.authors) {
        ordered_json obj;
        obj["author_id"] = author.author_id;
        obj["name"] = author.name;
        if (author.first_year) obj["first_year"] = *author.first_year;
        if (!author.tags.empty()) obj["tags"] = author.tags;
        obj["papers"] = ordered_json::array();
        for (const auto& paper : author.papers) {
            ordered_json entry;
            entry["paper_id"] = paper.paper_id;
            entry["citation_count"] = paper.citation_count;
            if (paper.year) entry["year"] = *paper.year;
            obj["papers"].push_back(std::move(entry));
        }
        out << obj.dump() << '\n';
    }
}

std::string authors_file_text(const Cohort& cohort) {
    std::ostringstream out;
    write_authors(cohort, out);
    return out.str();
}

CitationGraph parse_graph(std::istream& in, const std::string& source_name) {
    CitationGraph graph;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const auto obj = parse_line(source_name, line_no, line);
        if (!header_seen) {
            check_header(source_name, line_no, obj, kGraphFormat);
            header_seen = true;
            continue;
        }
        GraphPaper paper;
        paper.paper_id = require_string(source_name, line_no, obj, "paper_id");
        if (!obj.contains("author_ids") || !obj["author_ids"].is_array()) {
            fail_at(source_name, line_no, "missing or non-array field \"author_ids\"");
        }
        for (const auto& id : obj["author_ids"]) {
            if (!id.is_string()) fail_at(source_name, line_no, "author_ids must be strings");
            paper.author_ids.insert(id.get<std::string>());
        }
        if (obj.contains("cited_paper_ids")) {
            if (!obj["cited_paper_ids"].is_array()) {
                fail_at(source_name, line_no, "field \"cited_paper_ids\" must be an array");
            }
            for (const auto& id : obj["cited_paper_ids"]) {
                if (!id.is_string()) fail_at(source_name, line_no, "cited_paper_ids must be strings");
                paper.cited_paper_ids.insert(id.get<std::string>());
            }
        }
        try {
            graph.add_paper(std::move(paper));
        } catch (const ValidationError& err) {
            fail_at(source_name, line_no, err.what());
        }
    }
    return graph;
}

CitationGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file " + path.string());
    return parse_graph(in, path.stem().string());
}

namespace {

// Rejection-sampled bounded draw; unbiased and identical on every platform
// because mt19937_64's output sequence is fixed by the standard.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t value = rng();
    while (value >= limit) value = rng();
    return value % bound;
}

void sort_by_author_id(std::vector<AuthorRecord>& authors) {
    std::sort(authors.begin(), authors.end(),
              [](const AuthorRecord& a, const AuthorRecord& b) {
                  return a.author_id < b.author_id;
              });
}

}  // namespace

Cohort build_random_cohort(const Cohort& corpus, std::size_t n, std::int64_t min_pubs,
                           std::int64_t min_cites, std::uint64_t seed,
                           const std::optional<std::string>& require_tag) {
    std::vector<AuthorRecord> eligible;
    for (const auto& author : corpus.authors) {
        if (author.paper_count() < min_pubs) continue;
        if (author.citation_total() < min_cites) continue;
        if (require_tag && !author.has_tag(*require_tag)) continue;
        eligible.push_back(author);
    }
    if (eligible.size() < n) {
        throw ValidationError("random cohort needs " + std::to_string(n) +
                              " eligible authors, corpus has only " +
                              std::to_string(eligible.size()));
    }
    sort_by_author_id(eligible);  // make the draw independent of corpus order
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = i + bounded_draw(rng, eligible.size() - i);
        std::swap(eligible[i], eligible[j]);
    }
    eligible.resize(n);
    sort_by_author_id(eligible);

    Cohort cohort;
    cohort.name = corpus.name + "-random";
    cohort.authors = std::move(eligible);
    cohort.provenance = Provenance::random_sample;
    cohort.provenance_params = "n=" + std::to_string(n) + " min_pubs=" + std::to_string(min_pubs) +
                               " min_cites=" + std::to_string(min_cites) +
                               " seed=" + std::to_string(seed) +
                               (require_tag ? " tag=" + *require_tag : "");
    cohort.reference_year = corpus.reference_year;
    return cohort;
}

namespace {

Cohort build_top_cohort(const Cohort& corpus, std::size_t n, const char* suffix,
                        Provenance provenance,
                        const std::vector<std::int64_t>& keys) {
    if (corpus.authors.size() < n) {
        throw ValidationError("corpus has " + std::to_string(corpus.authors.size()) +
                              " authors, needs at least " + std::to_string(n));
    }
    std::vector<std::size_t> order(corpus.authors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] > keys[b];
        return corpus.authors[a].author_id < corpus.authors[b].author_id;
    });
    Cohort cohort;
    cohort.name = corpus.name + suffix;
    cohort.provenance = provenance;
    cohort.provenance_params = "n=" + std::to_string(n);
    cohort.reference_year = corpus.reference_year;
    cohort.authors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cohort.authors.push_back(corpus.authors[order[i]]);
    return cohort;
}

}  // namespace

Cohort build_productive_cohort(const Cohort& corpus, std::size_t n) {
    std::vector<std::int64_t> keys;
    keys.reserve(corpus.authors.size());
    for (const auto& author : corpus.authors) keys.push_back(author.paper_count());
    return build_top_cohort(corpus, n, "-productive", Provenance::most_productive, keys);
}

Cohort build_top_h_cohort(const Cohort& corpus, std::size_t n) {
    std::vector<std::int64_t> keys;
    keys.reserve(corpus.authors.size());
    for (const auto& author : corpus.authors) keys.push_back(h_index(author.curve()));
    return build_top_cohort(corpus, n, "-top-h", Provenance::top_h, keys);
}

CohortSummary cohort_summary(const Cohort& cohort) {
    CohortSummary summary;
    summary.author_count = cohort.authors.size();
    for (const auto& author : cohort.authors) {
        const auto pubs = author.paper_count();
        const auto cites = author.citation_total();
        summary.publication_total += pubs;
        summary.citation_total += cites;
        auto track = [](std::optional<std::int64_t>& lo, std::optional<std::int64_t>& hi,
                        std::int64_t value) {
            if (!lo || value < *lo) lo = value;
            if (!hi || value > *hi) hi = value;
        };
        track(summary.min_publications, summary.max_publications, pubs);
        track(summary.min_citations, summary.max_citations, cites);
    }
    if (summary.author_count > 0) {
        const auto n = static_cast<double>(summary.author_count);
        summary.mean_publications = static_cast<double>(summary.publication_total) / n;
        summary.mean_citations = static_cast<double>(summary.citation_total) / n;
    }
    return summary;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto emit = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) out << ',';
            out << csv_escape(fields[i]);
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

void write_plot_data(std::ostream& out, const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows) {
    for (const auto& comment : comments) out << "# " << comment << '\n';
    auto emit = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) out << ' ';
            const bool needs_quotes =
                fields[i].empty() || fields[i].find_first_of(" \t") != std::string::npos;
            if (needs_quotes) {
                out << '"' << fields[i] << '"';
            } else {
                out << fields[i];
            }
        }
        out << '\n';
    };
    out << "# ";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i != 0) out << ' ';
        out << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) emit(row);
}

}  // namespace picite
