#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "finring/ring.hpp"
#include "finring/verdict.hpp"

namespace finring {

// "role=label" per witness part, rendered with the ring's element labels.
std::vector<std::string> render_witness(const FiniteRing& r, const Verdict& v);

// One (ring, check) outcome. `check` is either a property id or an
// implication/example check id; `detail` carries the per-assertion text of
// example checks.
struct Report {
    std::string ring;     // canonical spec string
    std::string check;
    Verdict verdict;
    std::vector<std::string> witness_labels;  // witness rendered with element labels
    std::vector<std::string> detail;
    double elapsed_ms = 0.0;
};

// Stable-order JSON array; timing is emitted but documented as excluded from
// byte comparisons. `strip_timing` zeroes the field for golden files.
std::string reports_to_json(const std::vector<Report>& reports, bool strip_timing = false);
std::string reports_to_text(const std::vector<Report>& reports);

std::vector<Report> parse_reports_json(std::istream& in);
std::vector<Report> load_reports_file(const std::string& path);

void write_reports_file(const std::vector<Report>& reports, const std::string& path,
                        bool as_json = true);

}  // namespace finring
