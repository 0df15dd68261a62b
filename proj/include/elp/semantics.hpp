#ifndef ELP_SEMANTICS_HPP
#define ELP_SEMANTICS_HPP

#include "elp/solve.hpp"
#include "elp/syntax.hpp"

#include <optional>
#include <set>
#include <string>

namespace elp {

/// A world view: a non-empty set of belief sets.
using WorldView = std::set<Interpretation>;

std::string to_string(const WorldView& w);

enum class SemanticsId { G91, K15_PAPER, K15_CLASSIC, S16 };

/// "g91" / "k15" / "k15-classic" / "s16"
std::string to_string(SemanticsId s);
std::optional<SemanticsId> semantics_from_string(std::string_view name);

/// W |= K L: L is true in every belief set of w (for L = "not a": a is
/// absent from every belief set). The subjective-literal overload applies
/// the complement for "not K L".
bool wv_satisfies(const WorldView& w, const ObjectiveLiteral& inner);
bool wv_satisfies(const WorldView& w, const SubjectiveLiteral& l);

/// G91 modal reduct: every satisfied subjective literal becomes "top",
/// every unsatisfied one becomes "bot". The result is objective.
Program g91_reduct(const Program& p, const WorldView& w);

/// K15 reduct. Both variants replace a K L occurrence whose K L is satisfied
/// by L. They differ on "not K L" with K L satisfied (i.e. the whole literal
/// unsatisfied): K15_PAPER keeps the default negation and yields "not L",
/// K15_CLASSIC yields "bot". An unsatisfied K L occurrence yields "bot", so
/// "not K L" with K L unsatisfied yields "top" under both variants.
Program k15_reduct(const Program& p, const WorldView& w, SemanticsId variant);

struct WorldViewOptions {
    /// Cap on the number of distinct epistemic atoms K L (2^k reducts are tried).
    int max_subjective = 10;
};

/// All world views of a ground program under the given semantics: the
/// non-empty W with W = answer_sets(reduct(p, W)), found by enumerating the
/// 2^k truth assignments over the k distinct K L of p and keeping the
/// fixpoints consistent with their assignment. S16 filters the K15_PAPER
/// world views through s16_filter. For an objective program the result is
/// { answer_sets(p) } when that is non-empty, and empty otherwise.
std::set<WorldView> world_views(const Program& p, SemanticsId s, WorldViewOptions opt = {});

/// Knowledge maximization: keeps the candidates whose set of unsatisfied
/// K L (over the subjective literals occurring in p) is maximal w.r.t.
/// strict inclusion.
std::set<WorldView> s16_filter(const std::set<WorldView>& candidates, const Program& p);

/// The distinct epistemic atoms K L occurring in p (each inner objective
/// literal once, whether it occurs positively or under "not").
std::set<ObjectiveLiteral> epistemic_atoms(const Program& p);

} // namespace elp

#endif
