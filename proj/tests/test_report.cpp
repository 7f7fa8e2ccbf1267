#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "finring/properties.hpp"
#include "finring/report.hpp"
#include "finring/specparse.hpp"

using namespace finring;

namespace {

Report sample_fails() {
    Report r;
    r.ring = "Tn(GF(2),2)";
    r.check = "abelian";
    r.verdict = verdict_fails("abelian", {{"e", 3}, {"r", 2}},
                              {"e is idempotent but er != re"});
    r.witness_labels = {"e=E22", "r=E12"};
    r.elapsed_ms = 12.5;
    return r;
}

Report sample_na() {
    Report r;
    r.ring = "Z4";
    r.check = "left_sf";
    r.verdict = verdict_na("left_sf", "budget");
    r.elapsed_ms = 0.25;
    return r;
}

}  // namespace

TEST_CASE("JSON round trip preserves every field") {
    std::vector<Report> in = {sample_fails(), sample_na()};
    std::istringstream is(reports_to_json(in));
    std::vector<Report> out = parse_reports_json(is);
    REQUIRE(out.size() == 2);
    CHECK(out[0].ring == in[0].ring);
    CHECK(out[0].check == in[0].check);
    CHECK(out[0].verdict.status == Status::Fails);
    REQUIRE(out[0].verdict.witness.size() == 2);
    CHECK(out[0].verdict.witness[0].role == "e");
    CHECK(out[0].verdict.witness[0].elem == 3);
    CHECK(out[0].verdict.witness[1].role == "r");
    CHECK(out[0].witness_labels == in[0].witness_labels);
    CHECK(out[0].verdict.trace == in[0].verdict.trace);
    CHECK(out[0].elapsed_ms == doctest::Approx(12.5));
    CHECK(out[1].verdict.status == Status::NotApplicable);
    CHECK(out[1].verdict.reason == "budget");
    CHECK(out[1].verdict.witness.empty());
}

TEST_CASE("JSON field spellings are stable") {
    std::string j = reports_to_json({sample_fails()});
    CHECK(j.find("\"verdict\": \"fails\"") != std::string::npos);
    CHECK(j.find("\"ring\": \"Tn(GF(2),2)\"") != std::string::npos);
    std::string j2 = reports_to_json({sample_na()});
    CHECK(j2.find("\"verdict\": \"not_applicable\"") != std::string::npos);
    CHECK(j2.find("\"witness\": null") != std::string::npos);
}

TEST_CASE("timing can be stripped for byte comparisons") {
    std::string with = reports_to_json({sample_fails()}, false);
    std::string without = reports_to_json({sample_fails()}, true);
    CHECK(with != without);
    CHECK(without.find("\"elapsed_ms\": 0.0") != std::string::npos);
    Report other = sample_fails();
    other.elapsed_ms = 99.0;
    CHECK(reports_to_json({other}, true) == without);
}

TEST_CASE("text rendering shows status, witness and detail") {
    Report r = sample_fails();
    r.detail = {"checked 8 elements"};
    std::string text = reports_to_text({r, sample_na()});
    CHECK(text.find("[Fails] Tn(GF(2),2) :: abelian") != std::string::npos);
    CHECK(text.find("witness: e=E22, r=E12") != std::string::npos);
    CHECK(text.find("checked 8 elements") != std::string::npos);
    CHECK(text.find("reason: budget") != std::string::npos);
}

TEST_CASE("witness labels render from the ring tables") {
    FiniteRing t2 = parse_ring_spec("Tn(GF(2),2)");
    Verdict v = check_property(t2, "abelian");
    REQUIRE(v.fails());
    std::vector<std::string> rendered = render_witness(t2, v);
    REQUIRE(rendered.size() == 2);
    CHECK(rendered[0] == "e=E22");
    CHECK(rendered[1] == "r=E12");
}

TEST_CASE("report files round trip on disk") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "finring-report-test";
    fs::create_directories(dir);
    fs::path file = dir / "reports.json";
    std::vector<Report> in = {sample_fails(), sample_na()};
    write_reports_file(in, file.string());
    std::vector<Report> out = load_reports_file(file.string());
    REQUIRE(out.size() == 2);
    CHECK(out[0].check == "abelian");
    CHECK(out[1].verdict.reason == "budget");
    fs::remove_all(dir);
}

TEST_CASE("malformed report input is rejected") {
    std::istringstream bad("{\"not\": \"an array\"}");
    CHECK_THROWS_AS(parse_reports_json(bad), RingError);
    std::istringstream junk("nonsense");
    CHECK_THROWS_AS(parse_reports_json(junk), RingError);
    std::istringstream badverdict("[{\"ring\":\"Z2\",\"check\":\"c\",\"property\":\"p\",\"verdict\":\"maybe\"}]");
    CHECK_THROWS_AS(parse_reports_json(badverdict), RingError);
    CHECK_THROWS_AS(load_reports_file("/nonexistent/reports.json"), RingError);
}
