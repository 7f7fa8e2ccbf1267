#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finring/catalog.hpp"
#include "finring/properties.hpp"
#include "finring/report.hpp"
#include "finring/specparse.hpp"
#include "finring/suite.hpp"

namespace {

using namespace finring;

int run_check(const std::string& ring_spec, const std::string& property_id, bool as_json) {
    FiniteRing ring = parse_ring_spec(ring_spec);
    RingAnalysis analysis(ring);
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = check_property(analysis, property_id);
    auto t1 = std::chrono::steady_clock::now();
    Report rep;
    rep.ring = ring_spec;
    rep.check = property_id;
    rep.verdict = v;
    rep.witness_labels = render_witness(ring, v);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::vector<Report> reports{rep};
    std::cout << (as_json ? reports_to_json(reports) : reports_to_text(reports));
    return v.fails() ? 1 : 0;
}

int run_catalog(const std::string& suite_name, const std::string& out_path,
                std::size_t size_cap, bool strip_timing,
                const std::vector<std::string>& ring_files) {
    if (suite_name != "implications") {
        std::cerr << "unknown suite: " << suite_name << "\n";
        return 2;
    }
    CatalogConfig cfg;
    cfg.size_cap = size_cap;
    cfg.extra = ring_files;
    Catalog cat = build_catalog(cfg);
    std::cout << "catalog: " << cat.entries.size() << " entries, " << cat.skipped.size()
              << " skipped\n";
    for (const auto& s : cat.skipped) std::cout << "skipped: " << s << "\n";
    for (const auto& f : cat.findings)
        std::cout << "finding[" << f.severity << "] " << f.entry << ": " << f.detail << "\n";
    SuiteResult res = run_implication_suite(cat);
    std::cout << "suite: " << res.reports.size() << " reports, " << res.violations
              << " violations, " << res.not_applicable << " not applicable\n";
    if (res.violations > 0) {
        std::vector<Report> bad;
        for (const auto& r : res.reports)
            if (r.verdict.fails()) bad.push_back(r);
        std::cout << reports_to_text(bad);
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) raise("IoError", "cannot open " + out_path + " for writing", out_path);
        f << reports_to_json(res.reports, strip_timing);
    }
    return res.violations > 0 ? 1 : 0;
}

int run_paper(const std::string& example_id, bool as_json) {
    Catalog cat;
    if (example_id == "localization") cat = build_catalog();
    Report rep = paper_example(example_id, cat);
    std::vector<Report> reports{rep};
    std::cout << (as_json ? reports_to_json(reports) : reports_to_text(reports));
    return rep.verdict.fails() ? 1 : 0;
}

int run_replay(const std::string& report_path) {
    std::vector<Report> reports = load_reports_file(report_path);
    ReplayOutcome out = replay_reports(reports);
    for (const auto& line : out.lines) std::cout << line << "\n";
    return out.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ring structure and property checker"};
    app.require_subcommand(1);

    std::string ring_spec, property_id;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "decide one property on one ring");
    check->add_option("--ring", ring_spec, "ring spec, e.g. Z6, GF(8), Tn(GF(2),2)")
        ->required();
    check->add_option("--property", property_id, "property id, e.g. h_semicommutative")
        ->required();
    check->add_flag("--json", check_json, "emit the report as JSON");

    std::string suite_name, out_path;
    std::size_t size_cap = 4096;
    bool strip_timing = false;
    std::vector<std::string> ring_files;
    auto* catalog_cmd = app.add_subcommand("catalog", "operations on the built-in catalog");
    catalog_cmd->require_subcommand(1);
    auto* run = catalog_cmd->add_subcommand("run", "run a check suite over every entry");
    run->add_option("--suite", suite_name, "suite name (implications)")->required();
    run->add_option("--out", out_path, "write the full JSON report list here");
    run->add_option("--cap", size_cap, "skip catalog constructions above this many elements");
    run->add_flag("--strip-timing", strip_timing, "zero timing fields in the JSON output");
    run->add_option("--ring-file", ring_files, "extra ring table JSON files to include");

    std::string example_id;
    bool paper_json = false;
    auto* paper = app.add_subcommand("paper", "re-verify a worked example");
    paper->add_option("--example", example_id, "example id, e.g. e2_7")->required();
    paper->add_flag("--json", paper_json, "emit the report as JSON");

    std::string report_path;
    auto* replay = app.add_subcommand("replay", "re-run failing reports from a file");
    replay->add_option("--report", report_path, "report JSON produced by catalog run or check")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(ring_spec, property_id, check_json);
        if (*run) return run_catalog(suite_name, out_path, size_cap, strip_timing, ring_files);
        if (*paper) return run_paper(example_id, paper_json);
        if (*replay) return run_replay(report_path);
    } catch (const finring::RingError& e) {
        std::cerr << e.kind() << ": " << e.detail() << "\n";
        return 2;
    }
    return 2;
}
