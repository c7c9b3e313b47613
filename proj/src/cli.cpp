#include "picite/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "picite/cohort_stats.hpp"
#include "picite/indices.hpp"
#include "picite/ingest.hpp"
#include "picite/selfcite.hpp"
#include "picite/synth.hpp"

namespace picite {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

enum class OutFormat { csv, jsonl, plot };

OutFormat parse_format(const std::string& name) {
    if (name == "csv") return OutFormat::csv;
    if (name == "json-lines" || name == "jsonl") return OutFormat::jsonl;
    if (name == "plot-data" || name == "plot") return OutFormat::plot;
    throw ValidationError("unknown output format \"" + name + "\"");
}

std::string fmt_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string cell_text(const ordered_json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_float()) return fmt_double(value.get<double>());
    return value.dump();
}

// One tabular result; rendered as CSV, JSON lines, or gnuplot columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;       // objects keyed by `columns`
    std::vector<std::string> comments;    // emitted in plot format only
};

std::string render(const Table& table, OutFormat format) {
    std::ostringstream out;
    if (format == OutFormat::jsonl) {
        for (const auto& row : table.rows) out << row.dump() << '\n';
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        std::vector<std::string> fields;
        fields.reserve(table.columns.size());
        for (const auto& column : table.columns) fields.push_back(cell_text(row.at(column)));
        rows.push_back(std::move(fields));
    }
    if (format == OutFormat::csv) {
        write_csv(out, table.columns, rows);
    } else {
        write_plot_data(out, table.comments, table.columns, rows);
    }
    return out.str();
}

// Writes the fully rendered text, or nothing at all: the temp-then-rename
// dance means a failed run never leaves a partial file behind.
void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    fs::path path(output_path);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("PICITE_OUTPUT_DIR")) path = fs::path(dir) / path;
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw ValidationError("failed while writing " + tmp.string());
    }
    fs::rename(tmp, path);
}

ordered_json to_json(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

struct CommonOptions {
    std::string input;
    std::string output;
    std::string format = "csv";
    PiParams params;
    std::optional<int> ref_year;
};

void add_param_flags(CLI::App* cmd, PiParams& params) {
    cmd->add_option("--kappa", params.kappa, "core-area multiplier (default 1)");
    cmd->add_option("--lambda", params.lambda, "excess-area multiplier (default 1)");
    cmd->add_option("--mu", params.mu, "tail-area multiplier (default 1)");
    cmd->add_option("--nu", params.nu, "penalty-area multiplier (default 1)");
}

void warn_on_signs(const PiParams& params) {
    if (has_unconventional_signs(params)) {
        std::cerr << "warning: negative kappa/lambda/nu invert the index semantics\n";
    }
}

Cohort load_input(const CommonOptions& opt) {
    auto cohort = load_authors(opt.input);
    if (opt.ref_year) cohort.reference_year = opt.ref_year;
    return cohort;
}

Metric parse_metric(const std::string& name) {
    const auto metric = metric_from_name(name);
    if (!metric) {
        throw ValidationError("unknown metric \"" + name +
                              "\" (expected one of h, C, C/p, PI, XPI, m, PC)");
    }
    return *metric;
}

std::vector<AuthorRecord> sorted_authors(const Cohort& cohort) {
    auto authors = cohort.authors;
    std::sort(authors.begin(), authors.end(),
              [](const AuthorRecord& a, const AuthorRecord& b) {
                  return a.author_id < b.author_id;
              });
    return authors;
}

// ---- subcommands ----

// With --input the curves come from stored citation counts; with --graph
// they are derived from the citation graph (self-citations included) and the
// report rows carry source=graph.
void cmd_compute(const CommonOptions& opt, const std::string& graph_path) {
    warn_on_signs(opt.params);
    Cohort cohort;
    ReportSource source = ReportSource::counts;
    if (!graph_path.empty() && !opt.input.empty()) {
        throw ValidationError("pass either --input or --graph, not both");
    }
    if (!graph_path.empty()) {
        source = ReportSource::graph;
        const auto graph = load_graph(graph_path);
        cohort.name = fs::path(graph_path).stem().string();
        for (const auto& author_id : graph.author_ids()) {
            AuthorRecord author;
            author.author_id = author_id;
            author.name = author_id;
            const auto counts = curve_for_author(graph, author_id, true).counts();
            for (std::size_t i = 0; i < counts.size(); ++i) {
                author.papers.push_back(
                    {author_id + "-" + std::to_string(i + 1), counts[i], std::nullopt});
            }
            cohort.authors.push_back(std::move(author));
        }
        if (opt.ref_year) cohort.reference_year = opt.ref_year;
    } else {
        if (opt.input.empty()) throw ValidationError("--input or --graph is required");
        cohort = load_input(opt);
    }
    Table table;
    table.columns = {"author_id", "name", "p",   "C",   "h",  "C_T", "C_E", "C_H",
                     "C_TC",      "PI",   "C_IC", "XPI", "p_T", "PC",  "m",   "a",
                     "r",         "C/p",  "kappa", "lambda", "mu", "nu", "source"};
    table.comments = {"picite compute cohort=" + cohort.name};
    for (const auto& author : sorted_authors(cohort)) {
        auto report = compute_report(author.curve(), opt.params, author.first_year,
                                     cohort.reference_year);
        report.source = source;
        ordered_json row;
        row["author_id"] = author.author_id;
        row["name"] = author.name;
        row["p"] = report.papers;
        row["C"] = report.citations;
        row["h"] = report.h;
        row["C_T"] = report.tail_citations;
        row["C_E"] = report.excess_citations;
        row["C_H"] = report.core_citations;
        row["C_TC"] = report.tail_complement;
        row["PI"] = report.pi;
        row["C_IC"] = report.ideal_complement;
        row["XPI"] = report.xpi;
        row["p_T"] = report.tail_papers;
        row["PC"] = report.pc;
        row["m"] = to_json(report.m);
        row["a"] = to_json(report.a);
        row["r"] = to_json(report.r);
        row["C/p"] = to_json(report.cpp);
        row["kappa"] = report.params.kappa;
        row["lambda"] = report.params.lambda;
        row["mu"] = report.params.mu;
        row["nu"] = report.params.nu;
        row["source"] = to_string(report.source);
        table.rows.push_back(std::move(row));
    }
    write_output(render(table, parse_format(opt.format)), opt.output);
}

void cmd_classify(const CommonOptions& opt) {
    warn_on_signs(opt.params);
    const auto cohort = load_input(opt);
    Table table;
    table.columns = {"author_id", "PI", "class"};
    table.comments = {"picite classify cohort=" + cohort.name};
    for (const auto& author : sorted_authors(cohort)) {
        const auto pi = perfectionism_index(author.curve(), opt.params);
        ordered_json row;
        row["author_id"] = author.author_id;
        row["PI"] = pi;
        row["class"] = to_string(classify(pi));
        table.rows.push_back(std::move(row));
    }
    write_output(render(table, parse_format(opt.format)), opt.output);
}

void cmd_rank(const CommonOptions& opt, const std::string& by, const std::string& vs) {
    warn_on_signs(opt.params);
    const auto cohort = load_input(opt);
    const auto metric = parse_metric(by);
    const auto table_by = rank_table(cohort, metric, opt.params);

    Table table;
    table.comments = {"picite rank cohort=" + cohort.name + " by=" + table_by.metric};
    const std::string value_col = table_by.metric;
    table.columns = {"author_id", value_col, "pos"};

    std::optional<RankTable> table_vs;
    std::map<std::string, const RankRow*> vs_rows;
    std::map<std::string, int> deltas;
    std::string vs_col;
    if (!vs.empty()) {
        table_vs = rank_table(cohort, parse_metric(vs), opt.params);
        vs_col = table_vs->metric;
        table.columns.push_back(vs_col);
        table.columns.push_back(vs_col + "_pos");
        table.columns.push_back("change");
        for (const auto& row : table_vs->rows) vs_rows.emplace(row.author_id, &row);
        for (const auto& change : change_column(table_by, *table_vs)) {
            deltas.emplace(change.author_id, change.delta);
        }
        table.comments.push_back("change = pos(" + table_by.metric + ") - pos(" + vs_col + ")");
    }
    for (const auto& row : table_by.rows) {
        ordered_json out_row;
        out_row["author_id"] = row.author_id;
        out_row[value_col] = to_json(row.value);
        out_row["pos"] = row.position;
        if (table_vs) {
            const auto* other = vs_rows.at(row.author_id);
            out_row[vs_col] = to_json(other->value);
            out_row[vs_col + "_pos"] = other->position;
            out_row["change"] = deltas.at(row.author_id);
        }
        table.rows.push_back(std::move(out_row));
    }
    write_output(render(table, parse_format(opt.format)), opt.output);
}

void cmd_dist(const CommonOptions& opt, const std::string& metric_name_arg,
              const std::string& mode_name, int bins) {
    warn_on_signs(opt.params);
    const auto cohort = load_input(opt);
    const auto metric = parse_metric(metric_name_arg);
    DistMode mode;
    if (mode_name == "cdf") {
        mode = DistMode::cdf;
    } else if (mode_name == "pdf") {
        mode = DistMode::pdf;
    } else {
        throw ValidationError("mode must be cdf or pdf, got \"" + mode_name + "\"");
    }
    const auto points = distribution(cohort, metric, mode, Binning{bins}, opt.params);
    Table table;
    table.columns = {"x", "value"};
    table.comments = {"picite dist cohort=" + cohort.name + " metric=" + metric_name(metric) +
                      " mode=" + mode_name + " bins=" + std::to_string(bins) +
                      " n=" + std::to_string(cohort.authors.size())};
    for (const auto& point : points) {
        ordered_json row;
        row["x"] = point.x;
        row["value"] = point.value;
        table.rows.push_back(std::move(row));
    }
    write_output(render(table, parse_format(opt.format)), opt.output);
}

void cmd_qq(const CommonOptions& opt, const std::string& metric_x, const std::string& metric_y) {
    warn_on_signs(opt.params);
    const auto cohort = load_input(opt);
    const auto mx = parse_metric(metric_x);
    const auto my = parse_metric(metric_y);
    const auto points = qq_data(cohort, mx, my, opt.params);
    Table table;
    table.columns = {"author_id", "x_pct", "y_pct"};
    std::string rho_text = "n/a";
    if (cohort.authors.size() >= 3) {
        const auto rho = rank_correlation(cohort, mx, my, opt.params);
        if (rho) rho_text = fmt_double(*rho);
    }
    table.comments = {"picite qq cohort=" + cohort.name + " x=" + metric_name(mx) +
                          " y=" + metric_name(my),
                      "spearman_rho " + rho_text};
    for (const auto& point : points) {
        ordered_json row;
        row["author_id"] = point.author_id;
        row["x_pct"] = point.x_pct;
        row["y_pct"] = point.y_pct;
        table.rows.push_back(std::move(row));
    }
    write_output(render(table, parse_format(opt.format)), opt.output);
}

void cmd_sweep(const std::vector<std::string>& inputs, const CommonOptions& opt,
               const std::string& metric_name_arg, std::vector<std::int64_t> kappas) {
    const auto metric = parse_metric(metric_name_arg);
    if (kappas.empty()) kappas = {1, 2, 4};
    std::vector<Cohort> cohorts;
    cohorts.reserve(inputs.size());
    for (const auto& input : inputs) {
        auto cohort = load_authors(input);
        if (opt.ref_year) cohort.reference_year = opt.ref_year;
        cohorts.push_back(std::move(cohort));
    }
    const auto result = sign_table(cohorts, metric, kappas);
    Table table;
    table.columns = {"cohort", "metric", "kappa", "negative", "nonnegative",
                     "pct_negative", "pct_nonnegative"};
    table.comments = {"picite sweep metric=" + std::string(metric_name(metric))};
    for (const auto& row : result.rows) {
        ordered_json out_row;
        out_row["cohort"] = row.cohort;
        out_row["metric"] = metric_name(result.metric);
        out_row["kappa"] = row.kappa;
        out_row["negative"] = row.counts.negative;
        out_row["nonnegative"] = row.counts.nonnegative;
        out_row["pct_negative"] = row.counts.pct_negative;
        out_row["pct_nonnegative"] = row.counts.pct_nonnegative;
        table.rows.push_back(std::move(out_row));
    }
    write_output(render(table, parse_format(opt.format)), opt.output);
}

void cmd_synth(const SynthSpec& spec, const std::string& papers_range,
               const std::string& output) {
    SynthSpec resolved = spec;
    if (!papers_range.empty()) {
        const auto colon = papers_range.find(':');
        try {
            if (colon == std::string::npos) {
                resolved.papers.lo = resolved.papers.hi = std::stoll(papers_range);
            } else {
                resolved.papers.lo = std::stoll(papers_range.substr(0, colon));
                resolved.papers.hi = std::stoll(papers_range.substr(colon + 1));
            }
        } catch (const std::exception&) {
            throw ValidationError("--papers expects N or LO:HI, got \"" + papers_range + "\"");
        }
    }
    const auto cohort = generate_cohort(resolved);
    write_output(authors_file_text(cohort), output);
}

void cmd_selfcite(const std::string& graph_path, const CommonOptions& opt) {
    warn_on_signs(opt.params);
    const auto graph = load_graph(graph_path);
    const auto authors = graph.author_ids();
    if (authors.empty()) throw ValidationError("graph contains no papers");

    struct Entry {
        std::int64_t h_with = 0;
        std::int64_t h_without = 0;
        std::int64_t pi_with = 0;
        std::int64_t pi_without = 0;
    };
    std::vector<MetricValue> h_with_vals, h_without_vals, pi_with_vals, pi_without_vals;
    std::map<std::string, Entry> entries;
    for (const auto& author_id : authors) {
        const auto with = curve_for_author(graph, author_id, true);
        const auto without = curve_for_author(graph, author_id, false);
        Entry entry;
        entry.h_with = h_index(with);
        entry.h_without = h_index(without);
        entry.pi_with = perfectionism_index(with, opt.params);
        entry.pi_without = perfectionism_index(without, opt.params);
        entries.emplace(author_id, entry);
        h_with_vals.push_back({author_id, static_cast<double>(entry.h_with)});
        h_without_vals.push_back({author_id, static_cast<double>(entry.h_without)});
        pi_with_vals.push_back({author_id, static_cast<double>(entry.pi_with)});
        pi_without_vals.push_back({author_id, static_cast<double>(entry.pi_without)});
    }
    const auto qq_h = qq_from_tables(rank_table_from_values("h", h_with_vals),
                                     rank_table_from_values("h-noself", h_without_vals));
    const auto qq_pi = qq_from_tables(rank_table_from_values("PI", pi_with_vals),
                                      rank_table_from_values("PI-noself", pi_without_vals));
    std::map<std::string, const QqPoint*> qq_h_by_id, qq_pi_by_id;
    for (const auto& point : qq_h) qq_h_by_id.emplace(point.author_id, &point);
    for (const auto& point : qq_pi) qq_pi_by_id.emplace(point.author_id, &point);

    Table table;
    table.columns = {"author_id", "h_with", "h_without", "PI_with", "PI_without",
                     "h_with_pct", "h_without_pct", "PI_with_pct", "PI_without_pct"};
    table.comments = {"picite selfcite graph_papers=" + std::to_string(graph.size())};
    for (const auto& [author_id, entry] : entries) {
        ordered_json row;
        row["author_id"] = author_id;
        row["h_with"] = entry.h_with;
        row["h_without"] = entry.h_without;
        row["PI_with"] = entry.pi_with;
        row["PI_without"] = entry.pi_without;
        row["h_with_pct"] = qq_h_by_id.at(author_id)->x_pct;
        row["h_without_pct"] = qq_h_by_id.at(author_id)->y_pct;
        row["PI_with_pct"] = qq_pi_by_id.at(author_id)->x_pct;
        row["PI_without_pct"] = qq_pi_by_id.at(author_id)->y_pct;
        table.rows.push_back(std::move(row));
    }
    write_output(render(table, parse_format(opt.format)), opt.output);
}

void cmd_summary(const CommonOptions& opt) {
    const auto cohort = load_input(opt);
    const auto summary = cohort_summary(cohort);
    Table table;
    table.columns = {"cohort",    "authors",  "publications", "citations",
                     "mean_pubs", "min_pubs", "max_pubs",     "mean_cites",
                     "min_cites", "max_cites"};
    table.comments = {"picite summary"};
    ordered_json row;
    row["cohort"] = cohort.name;
    row["authors"] = summary.author_count;
    row["publications"] = summary.publication_total;
    row["citations"] = summary.citation_total;
    row["mean_pubs"] = to_json(summary.mean_publications);
    row["min_pubs"] = summary.min_publications ? ordered_json(*summary.min_publications)
                                               : ordered_json(nullptr);
    row["max_pubs"] = summary.max_publications ? ordered_json(*summary.max_publications)
                                               : ordered_json(nullptr);
    row["mean_cites"] = to_json(summary.mean_citations);
    row["min_cites"] = summary.min_citations ? ordered_json(*summary.min_citations)
                                             : ordered_json(nullptr);
    row["max_cites"] = summary.max_citations ? ordered_json(*summary.max_citations)
                                             : ordered_json(nullptr);
    table.rows.push_back(std::move(row));
    write_output(render(table, parse_format(opt.format)), opt.output);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"citation-curve penalty-area indices (PI / XPI)"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string by = "h";
    std::string vs;
    std::string metric = "PI";
    std::string metric_x = "h";
    std::string metric_y = "PI";
    std::string mode = "cdf";
    int bins = 20;
    std::vector<std::string> sweep_inputs;
    std::vector<std::int64_t> sweep_kappas;
    std::string graph_path;
    SynthSpec synth_spec;
    synth_spec.n_authors = 100;
    std::string papers_range;

    auto add_common = [&opt](CLI::App* cmd, bool with_input = true) {
        if (with_input) {
            cmd->add_option("--input", opt.input, "authors file (line-delimited JSON)")
                ->required();
        }
        cmd->add_option("--output", opt.output, "output path (default: stdout)");
        cmd->add_option("--format", opt.format, "csv, json-lines or plot-data");
        cmd->add_option("--ref-year", opt.ref_year,
                        "snapshot year for the m-quotient (default: max paper year)");
    };

    auto* compute = app.add_subcommand("compute", "per-author indices and penalty areas");
    compute->add_option("--input", opt.input, "authors file (line-delimited JSON)");
    compute->add_option("--graph", graph_path,
                        "derive curves from a citation graph instead of stored counts");
    compute->add_option("--output", opt.output, "output path (default: stdout)");
    compute->add_option("--format", opt.format, "csv, json-lines or plot-data");
    compute->add_option("--ref-year", opt.ref_year,
                        "snapshot year for the m-quotient (default: max paper year)");
    add_param_flags(compute, opt.params);
    compute->callback([&] { cmd_compute(opt, graph_path); });

    auto* classify_cmd = app.add_subcommand("classify", "label authors influential / mass_producer");
    add_common(classify_cmd);
    add_param_flags(classify_cmd, opt.params);
    classify_cmd->callback([&] { cmd_classify(opt); });

    auto* rank = app.add_subcommand("rank", "rank a cohort by one metric");
    add_common(rank);
    add_param_flags(rank, opt.params);
    rank->add_option("--by", by, "metric: h, C, C/p, PI, XPI, m, PC")->required();
    rank->add_option("--vs", vs, "second metric; adds its positions and a change column");
    rank->callback([&] { cmd_rank(opt, by, vs); });

    auto* dist = app.add_subcommand("dist", "empirical CDF/PDF of a metric");
    add_common(dist);
    add_param_flags(dist, opt.params);
    dist->add_option("--metric", metric, "metric to aggregate")->required();
    dist->add_option("--mode", mode, "cdf or pdf");
    dist->add_option("--bins", bins, "bin count for pdf mode (default 20)");
    dist->callback([&] { cmd_dist(opt, metric, mode, bins); });

    auto* qq = app.add_subcommand("qq", "normalized rank positions of two metrics");
    add_common(qq);
    add_param_flags(qq, opt.params);
    qq->add_option("--metric-x", metric_x, "metric on the x axis")->required();
    qq->add_option("--metric-y", metric_y, "metric on the y axis")->required();
    qq->callback([&] { cmd_qq(opt, metric_x, metric_y); });

    auto* sweep = app.add_subcommand("sweep", "sign table over kappa values");
    sweep->add_option("--input", sweep_inputs, "authors file; repeat for several cohorts")
        ->required();
    sweep->add_option("--output", opt.output, "output path (default: stdout)");
    sweep->add_option("--format", opt.format, "csv, json-lines or plot-data");
    sweep->add_option("--ref-year", opt.ref_year, "snapshot year for the m-quotient");
    sweep->add_option("--metric", metric, "PI or XPI");
    sweep->add_option("--kappa", sweep_kappas, "kappa values (default 1 2 4)");
    sweep->callback([&] { cmd_sweep(sweep_inputs, opt, metric, sweep_kappas); });

    auto* synth = app.add_subcommand("synth", "generate a power-law cohort in authors format");
    synth->add_option("--authors", synth_spec.n_authors, "number of authors");
    synth->add_option("--papers", papers_range, "papers per author: N or LO:HI");
    synth->add_option("--exponent", synth_spec.citation_exponent,
                      "power-law tail exponent (> 1, default 2.5)");
    synth->add_option("--max-citations", synth_spec.max_citations,
                      "truncation bound (default 10000)");
    synth->add_option("--seed", synth_spec.seed, "generator seed");
    synth->add_option("--output", opt.output, "output path (default: stdout)");
    synth->callback([&] { cmd_synth(synth_spec, papers_range, opt.output); });

    auto* selfcite = app.add_subcommand(
        "selfcite", "h and PI with vs. without self-citations from a citation graph");
    selfcite->add_option("--graph", graph_path, "graph file (line-delimited JSON)")->required();
    selfcite->add_option("--output", opt.output, "output path (default: stdout)");
    selfcite->add_option("--format", opt.format, "csv, json-lines or plot-data");
    add_param_flags(selfcite, opt.params);
    selfcite->callback([&] { cmd_selfcite(graph_path, opt); });

    auto* summary = app.add_subcommand("summary", "cohort-level statistics");
    add_common(summary);
    summary->callback([&] { cmd_summary(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace picite
