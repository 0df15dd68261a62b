#ifndef ELP_SPLITTING_HPP
#define ELP_SPLITTING_HPP

#include "elp/semantics.hpp"
#include "elp/syntax.hpp"

#include <set>
#include <vector>

namespace elp {

/// An epistemic splitting of a program: bottom rules mention only atoms of u,
/// top rules refer to u through epistemic operators only. Subjective rules
/// that satisfy both conditions, and subjective constraints, go to the top.
struct Splitting {
    std::set<Atom> u;
    Program bottom;
    Program top;
};

/// Condition check: every rule r satisfies Atoms(r) ⊆ u or
/// (Body_obj(r) ∪ Head(r)) ∩ u = ∅.
bool is_splitting_set(const std::set<Atom>& u, const Program& p);

/// Partitions p along u. Throws InvalidSplittingError when u is not an
/// epistemic splitting set.
Splitting split(const std::set<Atom>& u, const Program& p);

struct SplittingOptions {
    int max_atoms = 16; // 2^n candidate subsets are tested
};

/// All epistemic splitting sets of p (including the trivial ones, the empty
/// set and the full atom universe), canonically ordered.
std::vector<std::set<Atom>> enumerate_splitting_sets(const Program& p, SplittingOptions opt = {});

/// Subjective reduct E_U of the top w.r.t. a world view of the bottom:
/// every subjective literal whose atom lies in u becomes "top" when w
/// satisfies it and "bot" otherwise; subjective literals over other atoms
/// are untouched.
Program subjective_reduct(const Program& top, const std::set<Atom>& u, const WorldView& w);

/// WBT: pairwise unions of belief sets.
WorldView wbt(const WorldView& wb, const WorldView& wt);

/// Bottom-up composition: world views of the bottom, each driving a
/// subjective reduct of the top, combined via WBT.
std::set<WorldView> esp_world_views(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                    WorldViewOptions opt = {});

} // namespace elp

#endif
