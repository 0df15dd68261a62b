#ifndef ELP_TESTS_PROGRAMS_HPP
#define ELP_TESTS_PROGRAMS_HPP

// The worked examples used across the test suites.

namespace progs {

// two-cycle program: one objective loop, one epistemic loop
inline const char* kCycle =
    "a :- not b.\n"
    "b :- not a.\n"
    "e :- not K f.\n"
    "f :- not K e.\n";

// eight-rule ASP program with its lower half acting as a generator
inline const char* kLayeredAsp =
    "f :- a.\n"
    "e :- c.\n"
    ":- not p.\n"
    "a :- p.\n"
    "a :- q.\n"
    "p :- not q.\n"
    "q :- not p.\n"
    "c.\n";

inline const char* kLayeredAspBottom =
    "a :- p.\n"
    "a :- q.\n"
    "p :- not q.\n"
    "q :- not p.\n"
    "c.\n";

// epistemic variant of the same layering
inline const char* kLayeredElp =
    "f :- K a.\n"
    "e :- K c.\n"
    ":- not K p.\n"
    "a :- p.\n"
    "a :- q.\n"
    "p :- not K q.\n"
    "q :- not K p.\n"
    "c.\n";

inline const char* kLayeredElpBottomAtoms[] = {"a", "c", "p", "q"};

// disjunctive choice guarded by a subjective constraint
inline const char* kPi0 =
    "a | b.\n"
    ":- not K a.\n";

inline const char* kPi1 =
    "p | q.\n"
    ":- not K p.\n";

// kPi1 with an objective handle on the constraint
inline const char* kPi1Fact =
    "p | q.\n"
    "c.\n"
    ":- c, not K p.\n";

inline const char* kPi2 =
    "p | q.\n"
    ":- not K p.\n"
    "p :- K q.\n"
    "q :- K p.\n";

// ground eligibility program, abbreviated atom names
inline const char* kPi3 =
    "e :- h.\n"
    "e :- m, f.\n"
    "ne :- not f, not h.\n"
    "f | h.\n"
    "in :- not K e, not K ne.\n"
    "a :- K in.\n";

// kPi3 with the disjunctive fact replaced by a plain fact
inline const char* kPi3FactH =
    "e :- h.\n"
    "e :- m, f.\n"
    "ne :- not f, not h.\n"
    "h.\n"
    "in :- not K e, not K ne.\n"
    "a :- K in.\n";

// non-ground eligibility program over the single constant mike
inline const char* kEligibility =
    "eligible(X) :- high(X).\n"
    "eligible(X) :- minority(X), fair(X).\n"
    "noeligible(X) :- not fair(X), not high(X).\n"
    "fair(mike) | high(mike).\n"
    "interview(X) :- not K eligible(X), not K noeligible(X).\n"
    "appointment(X) :- K interview(X).\n";

} // namespace progs

#endif
