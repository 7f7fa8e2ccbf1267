#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "finring/catalog.hpp"
#include "finring/report.hpp"
#include "finring/structure.hpp"

namespace finring {

// Per-ring evaluation state shared by all checks of the suite: one analysis
// plus memoized property verdicts, so laws touching the same property do not
// recompute it. property() turns a SizeCapExceeded into a NotApplicable
// verdict instead of raising.
struct SuiteContext {
    RingAnalysis& analysis;
    std::map<std::string, Verdict>& cache;

    Verdict property(const std::string& id);
};

// One registered law checked per catalog ring. run returns Holds when the law
// is satisfied (vacuously or materially), Fails with both sides' witnesses on
// a violation, NotApplicable when hypotheses cannot be evaluated (non-unital
// rings for unital-only laws).
struct SuiteCheck {
    std::string id;
    std::string statement;  // human-readable law text
    std::function<Verdict(SuiteContext&)> run;
};

// The full registry, order-stable. docs/checks.md mirrors this list; a test
// diffs the two.
const std::vector<SuiteCheck>& implication_suite_checks();

struct SuiteResult {
    std::vector<Report> reports;
    std::size_t violations = 0;
    std::size_t not_applicable = 0;
};

SuiteResult run_implication_suite(const Catalog& catalog);

// Concrete worked examples: e2_7, triangular_quotient, u2_witness,
// localization. Each returns one Report whose detail lines list the
// per-assertion outcomes; verdict Holds iff all assertions pass. Unknown ids
// throw UnknownExample. `localization` needs the catalog; others ignore it.
const std::vector<std::string>& paper_example_ids();
Report paper_example(const std::string& id, const Catalog& catalog);

// In e2_7, the number of exponents n checked (the report records that the
// general statement follows from 8*4^n != 0 over the integers).
inline constexpr unsigned kE27PowerBound = 16;

// Re-evaluates every Fails report: parses the ring spec, re-runs the witness
// against the property definition, and confirms the violation reproduces.
// Returns a line per replayed report; ok=false if any fails to reproduce.
struct ReplayOutcome {
    bool ok = true;
    std::vector<std::string> lines;
};
ReplayOutcome replay_reports(const std::vector<Report>& reports, const Limits& limits = {});

}  // namespace finring
