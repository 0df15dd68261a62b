#ifndef ELP_TOPDOWN_HPP
#define ELP_TOPDOWN_HPP

#include "elp/semantics.hpp"
#include "elp/splitting.hpp"
#include "elp/syntax.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace elp {

/// The detached version T'_U of a splitting's top: every interface literal
/// K L_i / not K L_i is replaced by a fresh atom kl_i / nkl_i, and the
/// disjunctive facts kl_i | nkl_i are appended. Fresh atoms are named
/// k<atom> / nk<atom> (k_not_<atom> for a negative inner literal), with a
/// numeric suffix on collision with an existing atom.
struct DetachedTop {
    Program program;
    /// inner literal L of an interface pair -> (kl_i, nkl_i)
    std::map<ObjectiveLiteral, std::pair<Atom, Atom>> interface;
    std::set<Atom> fresh_atoms;

    /// Belief set with the fresh atoms removed.
    Interpretation strip(const Interpretation& i) const;
    WorldView strip(const WorldView& w) const;
};

/// F_U: the subjective literals of the top whose atom occurs in the bottom,
/// closed under epistemic negation (both K L and not K L for each such L).
std::set<SubjectiveLiteral> interface_literals(const Splitting& sp);

DetachedTop detach(const Splitting& sp);

/// World views of T'_U as a regular epistemic program, split repeatedly on
/// every kl_i/nkl_i pair until each result is homogeneous on every pair.
/// Empty fragments are dropped; the result is deduplicated and canonically
/// ordered.
std::vector<WorldView> interface_world_views(const DetachedTop& dt, SemanticsId s,
                                             WorldViewOptions opt = {});

/// The requisite set ES of an interface world view, partitioned into the
/// constraint set EC (pairs whose fresh atoms occur in a constraint of T'_U)
/// and the requirement set RQ = ES \ EC.
struct RequisiteSets {
    std::set<SubjectiveLiteral> es;
    std::set<SubjectiveLiteral> ec;
    std::set<SubjectiveLiteral> rq;
};

/// Requires w_prime to be homogeneous on every interface pair.
RequisiteSets requisite_sets(const WorldView& w_prime, const DetachedTop& dt);

/// W fulfills E iff W |= L for every K L in E and W |/= L for every
/// not K L in E.
bool fulfills(const WorldView& w, const std::set<SubjectiveLiteral>& e);

/// B_U^W: every occurrence of K L with K L in ec is replaced by L in rule
/// bodies (inside "not K L" the replacement yields "not L"). Negative
/// members of ec cause no substitution.
Program top_down_influence(const Program& bottom, const std::set<SubjectiveLiteral>& ec);

/// One interface world view of the detached top together with its stripped
/// form and requisite sets.
struct TopTrace {
    WorldView interface_wv;
    WorldView top_wv;
    RequisiteSets req;
};

std::vector<TopTrace> top_traces(const DetachedTop& dt, SemanticsId s, WorldViewOptions opt = {});

/// Basic top-down composition with explicitly supplied bottom world views:
/// wbt(W_B, W_T) for every top trace and every W_B fulfilling its ES.
/// Useful for multi-layer composition, where the bottom world views come
/// from a previous splitting stage.
std::set<WorldView> tdespb_compose(const Splitting& sp, const std::set<WorldView>& bottom_wvs,
                                   SemanticsId s, WorldViewOptions opt = {});

/// Candidate world views, basic version: bottom world views are computed
/// directly from the untouched bottom under s.
std::set<WorldView> tdespb_candidates(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                      WorldViewOptions opt = {});

/// Subset selection policy for the extended candidates: keep only the
/// subset-maximal fulfilling subset per (bottom world view, top trace) pair,
/// or every fulfilling subset.
enum class SubsetPolicy { maximal, all };

/// Candidate world views, extended version: the bottom is first rewritten by
/// top-down influence w.r.t. each trace's EC; when EC is non-empty, W_B
/// ranges over non-empty subsets of a bottom world view that fulfill ES,
/// otherwise W_B is the entire bottom world view and must fulfill RQ.
std::set<WorldView> tdesp_candidates(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                     SubsetPolicy policy = SubsetPolicy::maximal,
                                     WorldViewOptions opt = {});

/// Side-by-side run of the direct, bottom-up and top-down routes.
/// Equality verdicts are recomputed from the collections on demand.
struct EquivalenceReport {
    std::string program_id;
    std::set<Atom> u;
    SemanticsId semantics = SemanticsId::G91;
    SubsetPolicy policy = SubsetPolicy::maximal;

    std::set<WorldView> direct;
    std::set<WorldView> esp;
    std::set<WorldView> tdespb;
    std::set<WorldView> tdesp;
    std::vector<TopTrace> traces;

    bool esp_eq_direct() const { return esp == direct; }
    bool tdespb_eq_direct() const { return tdespb == direct; }
    bool tdesp_eq_direct() const { return tdesp == direct; }
    bool tdespb_eq_esp() const { return tdespb == esp; }
};

EquivalenceReport check_equivalence(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                    SubsetPolicy policy = SubsetPolicy::maximal,
                                    WorldViewOptions opt = {}, std::string program_id = {});

} // namespace elp

#endif
