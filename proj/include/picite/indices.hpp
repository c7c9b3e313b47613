#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "picite/model.hpp"

namespace picite {

// Largest h such that at least h papers have >= h citations; 0 for an
// empty curve.
std::int64_t h_index(const CitationCurve& curve);

struct Areas {
    std::int64_t citations = 0;         // C
    std::int64_t core_citations = 0;    // C_H
    std::int64_t excess_citations = 0;  // C_E = C_H - h^2
    std::int64_t tail_citations = 0;    // C_T = C - C_H
};

Areas curve_areas(const CitationCurve& curve);

// Tail complement penalty area: sum over tail papers of (h - C_i).
// Computed term-wise; the closed form h*(p-h) - C_T is asserted against it
// in tests rather than used here.
std::int64_t tail_complement(const CitationCurve& curve);

// Ideal complement penalty area: sum over papers with C_i < p of (p - C_i).
// Papers with C_i >= p contribute nothing (strict inequality).
std::int64_t ideal_complement(const CitationCurve& curve);

// kappa*h^2 + lambda*C_E + mu*C_T
std::int64_t parameterized_count(const CitationCurve& curve, std::int64_t kappa,
                                 std::int64_t lambda, std::int64_t mu);

// PI = kappa*h^2 + lambda*C_E - nu*C_TC
std::int64_t perfectionism_index(const CitationCurve& curve, const PiParams& params = {});

// XPI = kappa*h^2 + lambda*C_E + mu*C_T - nu*C_IC
std::int64_t extreme_perfectionism_index(const CitationCurve& curve, const PiParams& params = {});

enum class AuthorClass { influential, mass_producer };

const char* to_string(AuthorClass c);

// PI >= 0 counts as influential; only a strictly negative PI marks a mass
// producer (zero lands in the non-negative bucket).
AuthorClass classify(std::int64_t pi_value);

// h divided by the inclusive career span (reference_year - first_year + 1),
// floored at one year. Throws ValidationError when reference_year precedes
// first_year.
double m_quotient(std::int64_t h, int first_year, int reference_year);

// C / h^2; absent when h = 0.
std::optional<double> a_index(std::int64_t citations, std::int64_t h);

// sqrt(C_H)
double r_index(std::int64_t core_citations);

// C / p; absent when p = 0.
std::optional<double> citations_per_paper(std::int64_t citations, std::int64_t papers);

struct ScaledPoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const ScaledPoint&) const = default;
};

// Rank and citations both normalized by h, so the curve crosses y = x at
// x = 1. Requires h > 0.
std::vector<ScaledPoint> scaled_curve(const CitationCurve& curve);

// True when a multiplier is negative where the formulas only motivate a
// positive one (kappa, lambda, nu); callers may warn but proceed.
bool has_unconventional_signs(const PiParams& params);

IndexReport compute_report(const CitationCurve& curve, const PiParams& params = {},
                           std::optional<int> first_year = std::nullopt,
                           std::optional<int> reference_year = std::nullopt);

}  // namespace picite
