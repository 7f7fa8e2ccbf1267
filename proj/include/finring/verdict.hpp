#pragma once

#include <string>
#include <vector>

#include "finring/types.hpp"

namespace finring {

enum class Status { Holds, Fails, NotApplicable };

struct WitnessPart {
    std::string role;  // e.g. "u", "v", "r"
    Elem elem = 0;
};

// Outcome of one predicate on one ring. For Fails the witness names concrete
// elements and trace carries the equations they violate, so a reader can redo
// the arithmetic from the ring tables alone.
struct Verdict {
    Status status = Status::Holds;
    std::string property;
    std::vector<WitnessPart> witness;
    std::vector<std::string> trace;
    std::string reason;  // set for NotApplicable

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }
};

inline Verdict verdict_holds(std::string prop) {
    Verdict v;
    v.status = Status::Holds;
    v.property = std::move(prop);
    return v;
}

inline Verdict verdict_fails(std::string prop, std::vector<WitnessPart> w,
                             std::vector<std::string> trace = {}) {
    Verdict v;
    v.status = Status::Fails;
    v.property = std::move(prop);
    v.witness = std::move(w);
    v.trace = std::move(trace);
    return v;
}

inline Verdict verdict_na(std::string prop, std::string reason) {
    Verdict v;
    v.status = Status::NotApplicable;
    v.property = std::move(prop);
    v.reason = std::move(reason);
    return v;
}

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::NotApplicable: return "NotApplicable";
    }
    return "?";
}

// Machine-readable spelling, shared by the report JSON and the bindings.
inline const char* status_id(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::NotApplicable: return "not_applicable";
    }
    return "?";
}

}  // namespace finring
