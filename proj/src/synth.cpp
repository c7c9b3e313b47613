#include "picite/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace picite {

namespace {

// splitmix64 finalizer; decorrelates per-author sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t value = rng();
    while (value >= limit) value = rng();
    return value % bound;
}

std::string padded_id(const std::string& prefix, std::int64_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%06lld", static_cast<long long>(index));
    return prefix + buf;
}

}  // namespace

PowerLawSampler::PowerLawSampler(double exponent, std::int64_t max_value) {
    if (!(exponent > 1.0)) {
        throw ValidationError("power-law exponent must be > 1, got " + std::to_string(exponent));
    }
    if (max_value < 0) {
        throw ValidationError("max_citations must be >= 0");
    }
    cumulative_.reserve(static_cast<std::size_t>(max_value) + 1);
    double total = 0.0;
    for (std::int64_t k = 0; k <= max_value; ++k) {
        total += std::pow(static_cast<double>(k + 1), -exponent);
        cumulative_.push_back(total);
    }
    for (auto& c : cumulative_) c /= total;
}

std::int64_t PowerLawSampler::sample(std::mt19937_64& rng) const {
    const double u = unit_double(rng);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) return static_cast<std::int64_t>(cumulative_.size()) - 1;
    return static_cast<std::int64_t>(it - cumulative_.begin());
}

Cohort generate_cohort(const SynthSpec& spec) {
    if (spec.n_authors < 0) throw ValidationError("n_authors must be >= 0");
    if (spec.papers.lo < 0 || spec.papers.lo > spec.papers.hi) {
        throw ValidationError("papers-per-author range must satisfy 0 <= lo <= hi");
    }
    const PowerLawSampler sampler(spec.citation_exponent, spec.max_citations);

    Cohort cohort;
    cohort.name = "synthetic";
    cohort.provenance = Provenance::synthetic;
    cohort.provenance_params =
        "n=" + std::to_string(spec.n_authors) + " papers=" + std::to_string(spec.papers.lo) + ":" +
        std::to_string(spec.papers.hi) + " exponent=" + std::to_string(spec.citation_exponent) +
        " max_citations=" + std::to_string(spec.max_citations) +
        " seed=" + std::to_string(spec.seed);
    cohort.authors.reserve(static_cast<std::size_t>(spec.n_authors));

    for (std::int64_t i = 0; i < spec.n_authors; ++i) {
        std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(i)));
        const auto span = static_cast<std::uint64_t>(spec.papers.hi - spec.papers.lo) + 1;
        const auto paper_count =
            spec.papers.lo + static_cast<std::int64_t>(span == 1 ? 0 : bounded_draw(rng, span));

        AuthorRecord author;
        author.author_id = padded_id(spec.id_prefix, i + 1);
        author.name = author.author_id;
        author.papers.reserve(static_cast<std::size_t>(paper_count));
        for (std::int64_t j = 0; j < paper_count; ++j) {
            PaperRecord paper;
            paper.paper_id = author.author_id + "-P" + std::to_string(j + 1);
            paper.citation_count = sampler.sample(rng);
            author.papers.push_back(std::move(paper));
        }
        cohort.authors.push_back(std::move(author));
    }
    return cohort;
}

CitationCurve make_mass_producer(std::int64_t h_target, std::int64_t tail_len) {
    if (h_target < 1) throw ValidationError("h_target must be >= 1");
    if (tail_len < 0) throw ValidationError("tail_len must be >= 0");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(h_target), h_target);
    counts.insert(counts.end(), static_cast<std::size_t>(tail_len), 0);
    return CitationCurve::from_counts(std::move(counts));
}

CitationCurve make_influential(std::int64_t h_target, std::int64_t excess) {
    if (h_target < 1) throw ValidationError("h_target must be >= 1");
    if (excess < 0) throw ValidationError("excess must be >= 0");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(h_target), h_target);
    counts.front() += excess;
    return CitationCurve::from_counts(std::move(counts));
}

}  // namespace picite
