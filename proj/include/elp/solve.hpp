#ifndef ELP_SOLVE_HPP
#define ELP_SOLVE_HPP

#include "elp/syntax.hpp"

#include <set>

namespace elp {

/// A set of ground atoms (one answer set / belief set).
using Interpretation = std::set<Atom>;

std::string to_string(const Interpretation& i);

/// Truth of a ground objective literal w.r.t. an interpretation, with
/// default negation read classically and "top"/"bot" as constants.
bool literal_true(const ObjectiveLiteral& l, const Interpretation& i);

/// Classical model check: every rule whose body is satisfied has a satisfied
/// head (the empty head is falsum). Requires a ground objective program.
bool is_classical_model(const Program& p, const Interpretation& i);

/// Gelfond-Lifschitz reduct: drops rules with a false negative literal
/// ("not a" with a in i, "not not a" with a not in i) and strips the
/// remaining negative literals. Throws PreconditionError on subjective input.
Program gl_reduct(const Program& p, const Interpretation& i);

/// Least Herbrand model of a positive non-disjunctive program via the
/// immediate consequence operator. Constraints are ignored by the fixpoint
/// and checked afterwards; a violated constraint raises UnsatisfiableError.
/// A disjunctive head raises PreconditionError.
Interpretation least_model(const Program& p);

/// All answer sets of a ground objective program: the interpretations that
/// are minimal classical models of their own GL-reduct. Canonically ordered;
/// the empty result means the program is inconsistent.
std::set<Interpretation> answer_sets(const Program& p);

} // namespace elp

#endif
