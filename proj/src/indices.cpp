#include "picite/indices.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace picite {

std::int64_t h_index(const CitationCurve& curve) {
    const auto& counts = curve.counts();
    std::int64_t h = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] >= static_cast<std::int64_t>(i) + 1) {
            h = static_cast<std::int64_t>(i) + 1;
        } else {
            break;
        }
    }
    return h;
}

Areas curve_areas(const CitationCurve& curve) {
    const auto h = h_index(curve);
    const auto& counts = curve.counts();
    Areas areas;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        areas.citations += counts[i];
        if (static_cast<std::int64_t>(i) < h) areas.core_citations += counts[i];
    }
    areas.excess_citations = areas.core_citations - h * h;
    areas.tail_citations = areas.citations - areas.core_citations;
    return areas;
}

std::int64_t tail_complement(const CitationCurve& curve) {
    const auto h = h_index(curve);
    const auto& counts = curve.counts();
    std::int64_t sum = 0;
    for (std::size_t i = static_cast<std::size_t>(h); i < counts.size(); ++i) {
        sum += h - counts[i];
    }
    return sum;
}

std::int64_t ideal_complement(const CitationCurve& curve) {
    const auto p = curve.paper_count();
    std::int64_t sum = 0;
    for (const auto count : curve.counts()) {
        if (count < p) sum += p - count;
    }
    return sum;
}

std::int64_t parameterized_count(const CitationCurve& curve, std::int64_t kappa,
                                 std::int64_t lambda, std::int64_t mu) {
    const auto h = h_index(curve);
    const auto areas = curve_areas(curve);
    return kappa * h * h + lambda * areas.excess_citations + mu * areas.tail_citations;
}

std::int64_t perfectionism_index(const CitationCurve& curve, const PiParams& params) {
    const auto h = h_index(curve);
    const auto areas = curve_areas(curve);
    return params.kappa * h * h + params.lambda * areas.excess_citations -
           params.nu * tail_complement(curve);
}

std::int64_t extreme_perfectionism_index(const CitationCurve& curve, const PiParams& params) {
    const auto h = h_index(curve);
    const auto areas = curve_areas(curve);
    return params.kappa * h * h + params.lambda * areas.excess_citations +
           params.mu * areas.tail_citations - params.nu * ideal_complement(curve);
}

const char* to_string(AuthorClass c) {
    return c == AuthorClass::influential ? "influential" : "mass_producer";
}

AuthorClass classify(std::int64_t pi_value) {
    return pi_value < 0 ? AuthorClass::mass_producer : AuthorClass::influential;
}

double m_quotient(std::int64_t h, int first_year, int reference_year) {
    if (reference_year < first_year) {
        throw ValidationError("reference year " + std::to_string(reference_year) +
                              " precedes first publication year " + std::to_string(first_year));
    }
    const auto span = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(reference_year) - first_year + 1);
    return static_cast<double>(h) / static_cast<double>(span);
}

std::optional<double> a_index(std::int64_t citations, std::int64_t h) {
    if (h <= 0) return std::nullopt;
    return static_cast<double>(citations) / static_cast<double>(h * h);
}

double r_index(std::int64_t core_citations) {
    return std::sqrt(static_cast<double>(core_citations));
}

std::optional<double> citations_per_paper(std::int64_t citations, std::int64_t papers) {
    if (papers <= 0) return std::nullopt;
    return static_cast<double>(citations) / static_cast<double>(papers);
}

std::vector<ScaledPoint> scaled_curve(const CitationCurve& curve) {
    const auto h = h_index(curve);
    if (h == 0) throw ValidationError("cannot scale a curve with h = 0");
    const auto& counts = curve.counts();
    std::vector<ScaledPoint> points;
    points.reserve(counts.size());
    const auto hd = static_cast<double>(h);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        points.push_back({static_cast<double>(i + 1) / hd, static_cast<double>(counts[i]) / hd});
    }
    return points;
}

bool has_unconventional_signs(const PiParams& params) {
    return params.kappa < 0 || params.lambda < 0 || params.nu < 0;
}

IndexReport compute_report(const CitationCurve& curve, const PiParams& params,
                           std::optional<int> first_year, std::optional<int> reference_year) {
    IndexReport report;
    report.h = h_index(curve);
    report.papers = curve.paper_count();
    report.tail_papers = report.papers - report.h;
    const auto areas = curve_areas(curve);
    report.citations = areas.citations;
    report.core_citations = areas.core_citations;
    report.excess_citations = areas.excess_citations;
    report.tail_citations = areas.tail_citations;
    report.tail_complement = tail_complement(curve);
    report.ideal_complement = ideal_complement(curve);
    report.pc = parameterized_count(curve, params.kappa, params.lambda, params.mu);
    report.pi = perfectionism_index(curve, params);
    report.xpi = extreme_perfectionism_index(curve, params);
    if (first_year && reference_year) {
        report.m = m_quotient(report.h, *first_year, *reference_year);
    }
    report.a = a_index(report.citations, report.h);
    report.r = r_index(report.core_citations);
    report.cpp = citations_per_paper(report.citations, report.papers);
    report.params = params;
    return report;
}

}  // namespace picite
