#pragma once

#include <memory>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

struct CatalogConfig {
    std::size_t size_cap = 4096;       // per-entry element cap for default builds
    std::vector<std::string> extra;    // additional ring spec strings (incl. @file)
};

// A defect observed while building an entry: a construction that is not
// multiplicatively closed, or an empirical verdict that contradicts a claimed
// classification. Severity is "paper-discrepancy" for the latter.
struct Finding {
    std::string entry;
    std::string severity;  // "note" | "paper-discrepancy"
    std::string detail;
};

struct CatalogEntry {
    std::string name;   // canonical spec string
    RingPtr ring;
    std::string note;   // provenance: how the entry was built
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::vector<std::string> skipped;   // "name: reason" for cap-exceeded builds
    std::vector<Finding> findings;

    const CatalogEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

// Default catalog: cyclic rings, small fields, M2(GF(2)), two products, the
// eight matrix families over Z4/Z8/Z16/GF(2) at n in {2,3}, the triangular
// ring T3(GF(2)) with its strict-upper quotient, plus user specs. Builds that
// would exceed the cap are recorded in `skipped`; non-closed family sets and
// claim mismatches land in `findings`.
Catalog build_catalog(const CatalogConfig& config = {});

}  // namespace finring
