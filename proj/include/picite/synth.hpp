#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "picite/model.hpp"

namespace picite {

// Papers per author: fixed when lo == hi, otherwise uniform in [lo, hi].
struct PaperCountSpec {
    std::int64_t lo = 10;
    std::int64_t hi = 10;
};

struct SynthSpec {
    std::int64_t n_authors = 0;
    PaperCountSpec papers;
    double citation_exponent = 2.5;     // power-law tail exponent, must be > 1
    std::int64_t max_citations = 10000; // truncation bound of the discrete law
    std::uint64_t seed = 0;
    std::string id_prefix = "S";        // author ids: <prefix>000001, ...
};

// Per-paper citation counts drawn from a discrete power law with weights
// (k+1)^-exponent on k = 0..max_citations, sampled by inverse CDF. Each
// author gets an independent sub-seed derived from (seed, index), so the
// cohort is reproducible and could be generated in any order.
Cohort generate_cohort(const SynthSpec& spec);

// h_target papers with h_target citations plus tail_len uncited papers;
// the default PI is h^2 - h*tail_len, arbitrarily negative for long tails.
CitationCurve make_mass_producer(std::int64_t h_target, std::int64_t tail_len);

// No tail: h_target papers with h_target citations, the top one carrying
// `excess` extra citations, so the default PI is h^2 + excess.
CitationCurve make_influential(std::int64_t h_target, std::int64_t excess);

// Inverse-CDF sampler over the truncated support; reused across authors.
class PowerLawSampler {
public:
    PowerLawSampler(double exponent, std::int64_t max_value);

    std::int64_t sample(std::mt19937_64& rng) const;

private:
    std::vector<double> cumulative_;
};

}  // namespace picite
