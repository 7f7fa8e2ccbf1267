#pragma once

#include <string>
#include <vector>

#include "finring/structure.hpp"
#include "finring/verdict.hpp"

namespace finring {

// Identifiers accepted by check_property, in the registry's canonical order.
const std::vector<std::string>& property_ids();
bool is_property_id(const std::string& id);

// Decides one named ring-class predicate. Fails verdicts carry lexicographic
// first witnesses (ordered by the tuple of quantified elements) and a trace.
// Unknown ids throw UnknownProperty.
Verdict check_property(RingAnalysis& a, const std::string& id);
Verdict check_property(const FiniteRing& r, const std::string& id);

// armendariz_bounded with an explicit degree bound; the bare string id uses 3.
Verdict armendariz_bounded(RingAnalysis& a, int degree_bound, const Limits& limits = {});

// The maximal left ideals K that are essential, i.e. those whose quotient
// R/K is a simple singular left module. Unital rings only.
std::vector<std::vector<Elem>> simple_singular_left_modules(RingAnalysis& a);

enum class ExtMode { Wnil, Gp };

// Extendability of maps out of the cyclic submodule Ru^n into R/K: Holds iff
// some n with u^n != 0 makes every well-defined f : Ru^n -> R/K (those with
// l(u^n) f(u^n) = 0) of the form left-multiplication, i.e. f(u^n) lies in
// u^n (R/K). Wnil mode requires u nonzero nilpotent, Gp mode u nonzero;
// violations throw PreconditionViolated.
Verdict module_extension_test(RingAnalysis& a, const std::vector<Elem>& k, Elem u, ExtMode mode);

}  // namespace finring
