#include "finring/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "finring/version.hpp"

namespace finring {

namespace {

using ordered_json = nlohmann::ordered_json;

Status status_from_json(const std::string& s) {
    if (s == "holds") return Status::Holds;
    if (s == "fails") return Status::Fails;
    if (s == "not_applicable") return Status::NotApplicable;
    raise("ParseError", "unknown verdict '" + s + "'");
}

ordered_json report_json(const Report& r, bool strip_timing) {
    ordered_json j;
    j["ring"] = r.ring;
    j["check"] = r.check;
    j["property"] = r.verdict.property;
    j["verdict"] = status_id(r.verdict.status);
    if (r.verdict.witness.empty()) {
        j["witness"] = nullptr;
    } else {
        ordered_json w = ordered_json::array();
        for (const auto& p : r.verdict.witness)
            w.push_back(ordered_json{{"role", p.role}, {"elem", p.elem}});
        j["witness"] = w;
    }
    j["witness_labels"] = r.witness_labels;
    j["reason"] = r.verdict.reason.empty() ? ordered_json() : ordered_json(r.verdict.reason);
    j["trace"] = r.verdict.trace;
    j["detail"] = r.detail;
    j["elapsed_ms"] = strip_timing ? 0.0 : r.elapsed_ms;
    j["engine"] = kEngineVersion;
    return j;
}

}  // namespace

std::vector<std::string> render_witness(const FiniteRing& r, const Verdict& v) {
    std::vector<std::string> out;
    for (const auto& p : v.witness) out.push_back(p.role + "=" + r.label(p.elem));
    return out;
}

std::string reports_to_json(const std::vector<Report>& reports, bool strip_timing) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, strip_timing));
    return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<Report>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "[" << status_name(r.verdict.status) << "] " << r.ring << " :: " << r.check
           << "\n";
        if (!r.witness_labels.empty()) {
            os << "  witness: ";
            for (std::size_t i = 0; i < r.witness_labels.size(); ++i) {
                if (i) os << ", ";
                os << r.witness_labels[i];
            }
            os << "\n";
        }
        if (!r.verdict.reason.empty()) os << "  reason: " << r.verdict.reason << "\n";
        for (const auto& t : r.verdict.trace) os << "  " << t << "\n";
        for (const auto& d : r.detail) os << "  " << d << "\n";
    }
    return os.str();
}

std::vector<Report> parse_reports_json(std::istream& in) {
    ordered_json arr;
    try {
        in >> arr;
    } catch (const std::exception& e) {
        raise("ParseError", std::string("bad report JSON: ") + e.what());
    }
    if (!arr.is_array()) raise("ParseError", "report file must hold a JSON array");
    std::vector<Report> out;
    for (const auto& j : arr) {
        Report r;
        r.ring = j.at("ring").get<std::string>();
        r.check = j.at("check").get<std::string>();
        r.verdict.property = j.at("property").get<std::string>();
        r.verdict.status = status_from_json(j.at("verdict").get<std::string>());
        if (j.contains("witness") && !j.at("witness").is_null())
            for (const auto& w : j.at("witness"))
                r.verdict.witness.push_back(
                    {w.at("role").get<std::string>(), w.at("elem").get<Elem>()});
        if (j.contains("witness_labels"))
            r.witness_labels = j.at("witness_labels").get<std::vector<std::string>>();
        if (j.contains("reason") && !j.at("reason").is_null())
            r.verdict.reason = j.at("reason").get<std::string>();
        if (j.contains("trace"))
            r.verdict.trace = j.at("trace").get<std::vector<std::string>>();
        if (j.contains("detail")) r.detail = j.at("detail").get<std::vector<std::string>>();
        if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> load_reports_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise("IoError", "cannot open '" + path + "'");
    return parse_reports_json(in);
}

void write_reports_file(const std::vector<Report>& reports, const std::string& path,
                        bool as_json) {
    std::ofstream out(path);
    if (!out) raise("IoError", "cannot open '" + path + "' for writing");
    out << (as_json ? reports_to_json(reports) : reports_to_text(reports));
    if (!out) raise("IoError", "write to '" + path + "' failed");
}

}  // namespace finring
