#include "finring/catalog.hpp"

#include <sstream>

#include "finring/constructions.hpp"
#include "finring/properties.hpp"
#include "finring/specparse.hpp"

namespace finring {

namespace {

struct BaseInfo {
    std::string name;
    FiniteRing ring;
    bool reduced = false;
    bool h = false;       // h_semicommutative
    bool nil2 = false;    // nil_semicommutative_2
};

void add_entry(Catalog& c, std::string name, FiniteRing r, std::string note) {
    CatalogEntry e;
    e.name = std::move(name);
    e.ring = std::make_shared<const FiniteRing>(std::move(r));
    e.note = std::move(note);
    c.entries.push_back(std::move(e));
}

void add_spec_entry(Catalog& c, const std::string& spec, const Limits& lim,
                    const std::string& note) {
    if (c.find(spec)) {
        c.skipped.push_back(spec + ": duplicate name");
        return;
    }
    try {
        add_entry(c, spec, parse_ring_spec(spec, lim), note);
    } catch (const RingError& e) {
        if (e.kind() == "SizeCapExceeded") {
            c.skipped.push_back(spec + ": " + e.detail());
        } else if (e.kind() == "ConstructionNotARing") {
            c.findings.push_back({spec, "note", e.detail()});
            c.skipped.push_back(spec + ": not a ring");
        } else {
            throw;
        }
    }
}

std::string witness_suffix(const FiniteRing& r, const Verdict& v) {
    if (v.witness.empty()) return "";
    std::ostringstream os;
    os << " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) os << ", ";
        os << v.witness[i].role << "=" << r.label(v.witness[i].elem);
    }
    os << "]";
    return os.str();
}

// Checks one classification claim against the built instance and flags any
// mismatch; agreement produces no record.
void check_claim(Catalog& c, const std::string& entry, RingAnalysis& a,
                 const std::string& prop, bool expect_holds, const std::string& claim) {
    Verdict v = check_property(a, prop);
    bool ok = expect_holds ? v.holds() : v.fails();
    if (ok) return;
    std::ostringstream os;
    os << claim << ": expected " << (expect_holds ? "Holds" : "Fails") << ", verdict "
       << status_name(v.status) << witness_suffix(a.ring(), v);
    c.findings.push_back({entry, "paper-discrepancy", os.str()});
}

void evaluate_claims(Catalog& c, const std::string& entry, Family f, int n,
                     const BaseInfo& base, const FiniteRing& r) {
    RingAnalysis a(r);
    if (f == Family::Tn) {
        check_claim(c, entry, a, "h_semicommutative", false,
                    "triangular matrix rings are claimed never h-semicommutative");
        if (base.nil2)
            check_claim(c, entry, a, "nil_semicommutative_2", true,
                        "nil-semicommutative-II is claimed to lift from the base to Tn");
    }
    if ((f == Family::TRn || f == Family::An || f == Family::Un) && base.reduced)
        check_claim(c, entry, a, "central_semicommutative", true,
                    "over a reduced base TRn/An/Un are claimed central-semicommutative");
    if ((f == Family::Sprime || f == Family::TprimeRn || f == Family::An ||
         f == Family::Un) &&
        base.h) {
        check_claim(c, entry, a, "h_semicommutative", true,
                    "over an h-semicommutative base this family is claimed h-semicommutative");
        check_claim(c, entry, a, "central_semicommutative", false,
                    "over an h-semicommutative base this family is claimed not "
                    "central-semicommutative");
    }
    if (f == Family::Bn && base.h) {
        check_claim(c, entry, a, "h_semicommutative", true,
                    "over an h-semicommutative base Bn is claimed h-semicommutative");
        if (n == 2 || n == 3)
            check_claim(c, entry, a, "central_semicommutative", false,
                        "Bn at n = 2,3 is claimed not central-semicommutative");
    }
}

}  // namespace

Catalog build_catalog(const CatalogConfig& config) {
    Catalog c;
    Limits lim;
    lim.size_cap = config.size_cap;

    for (std::size_t n : {2, 3, 4, 6, 8, 9, 12, 16})
        add_entry(c, "Z" + std::to_string(n), cyclic_ring(n),
                  "cyclic ring of order " + std::to_string(n));
    for (std::size_t q : {2, 3, 4, 8, 9})
        add_entry(c, "GF(" + std::to_string(q) + ")", finite_field(q),
                  "finite field of order " + std::to_string(q));
    add_spec_entry(c, "M2(GF(2))", lim, "full 2x2 matrix ring");
    add_spec_entry(c, "prod(Z2,Z3)", lim, "direct product");
    add_spec_entry(c, "prod(GF(2),prod(GF(2),GF(2)))", lim, "direct product");

    const Family fams[] = {Family::Tn,  Family::Sn, Family::Sprime, Family::TRn,
                           Family::TprimeRn, Family::An, Family::Bn, Family::Un};
    std::vector<BaseInfo> bases;
    for (const char* bn : {"Z4", "Z8", "Z16", "GF(2)"}) {
        FiniteRing ring = parse_ring_spec(bn, lim);
        RingAnalysis a(ring);
        bool reduced = check_property(a, "reduced").holds();
        bool h = check_property(a, "h_semicommutative").holds();
        bool nil2 = check_property(a, "nil_semicommutative_2").holds();
        bases.push_back(BaseInfo{bn, std::move(ring), reduced, h, nil2});
    }
    for (const BaseInfo& base : bases)
        for (Family f : fams)
            for (int n : {2, 3}) {
                std::ostringstream name;
                name << family_name(f) << "(" << base.name << "," << n << ")";
                try {
                    BuildOutcome b = build_matrix_subring(f, base.ring, n, lim);
                    if (!b.closed) {
                        c.findings.push_back(
                            {name.str(), "note",
                             "the literal member set is not a ring; " + b.trace.back()});
                        continue;
                    }
                    evaluate_claims(c, name.str(), f, n, base, *b.ring);
                    add_entry(c, name.str(), std::move(*b.ring),
                              "matrix family build; " + b.trace.front());
                } catch (const RingError& e) {
                    if (e.kind() != "SizeCapExceeded") throw;
                    c.skipped.push_back(name.str() + ": " + e.detail());
                }
            }

    add_spec_entry(c, "quot(Tn(GF(2),3),strictupper)", lim,
                   "strict-upper quotient of the triangular build");
    for (const std::string& spec : config.extra) add_spec_entry(c, spec, lim, "user spec");
    return c;
}

}  // namespace finring
