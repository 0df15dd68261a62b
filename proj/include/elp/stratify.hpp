#ifndef ELP_STRATIFY_HPP
#define ELP_STRATIFY_HPP

#include "elp/syntax.hpp"

#include <map>
#include <vector>

namespace elp {

struct StratificationResult {
    bool stratified = false;
    /// Canonical minimal level mapping (longest-path depth, minimum 0);
    /// atoms not occurring in any rule get level 0. Present iff stratified.
    std::map<Atom, int> lambda;
    /// One atom per equivalence class along an infeasible strictness cycle.
    /// Present iff not stratified.
    std::vector<Atom> violation;
};

/// Epistemic stratification: a level mapping exists with all non-subjective
/// atoms of a rule on one level and every subjective body atom strictly
/// below the rule's head and objective body atoms. Decided by union-find
/// over the equality constraints followed by a cycle check on the strict
/// edges between classes.
StratificationResult stratify(const Program& p);

} // namespace elp

#endif
