// Acceptance suite: end-to-end checks of the solver, the bottom-up and
// top-down splitting compositions, and the property suites on randomly
// generated programs. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact set equality.

#include "elp/semantics.hpp"
#include "elp/solve.hpp"
#include "elp/splitting.hpp"
#include "elp/stratify.hpp"
#include "elp/syntax.hpp"
#include "elp/topdown.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/programs.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

using namespace elp;

namespace {

int g_failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
    std::printf("[%s] %2d: %s\n", ok ? "PASS" : "FAIL", id, label);
    if (!ok) {
        std::printf("          %s\n", detail.c_str());
        ++g_failures;
    }
}

Interpretation interp(std::initializer_list<const char*> names) {
    Interpretation i;
    for (const char* n : names) i.insert(atom(n));
    return i;
}

std::string show(const std::set<WorldView>& c) {
    std::string out;
    for (const auto& w : c) out += to_string(w) + " ";
    return out.empty() ? "(none)" : out;
}

const WorldView kCycleW1{interp({"a", "e"}), interp({"b", "e"})};
const WorldView kCycleW2{interp({"a", "f"}), interp({"b", "f"})};

// 1. the double-cycle program has exactly two world views under every semantics
void criterion1() {
    Program p = parse_program(progs::kCycle);
    std::set<WorldView> expect{kCycleW1, kCycleW2};
    bool ok = true;
    std::string detail;
    for (SemanticsId s : {SemanticsId::G91, SemanticsId::K15_PAPER, SemanticsId::K15_CLASSIC,
                          SemanticsId::S16}) {
        auto got = world_views(p, s);
        if (got != expect) {
            ok = false;
            detail += to_string(s) + " returned " + show(got) + " ";
        }
    }
    report(1, "cycle program: exactly two world views under g91, k15, k15-classic, s16", ok,
           detail);
}

// 2. answer sets of the layered ASP program and of its bottom half
void criterion2() {
    auto all = answer_sets(parse_program(progs::kLayeredAsp));
    auto bottom = answer_sets(parse_program(progs::kLayeredAspBottom));
    bool ok = all == std::set<Interpretation>{interp({"c", "p", "a", "e", "f"})} &&
              bottom == std::set<Interpretation>{interp({"c", "p", "a"}),
                                                 interp({"c", "q", "a"})};
    report(2, "layered ASP program: answer sets of the program and of its bottom", ok,
           "got " + show({all}) + "and " + show({bottom}));
}

// 3. layered ELP: bottom-up and basic top-down compositions agree, and the
//    detached top yields the four interface world views with their ec/rq sets
void criterion3() {
    Program p = parse_program(progs::kLayeredElp);
    std::set<Atom> u = {atom("a"), atom("c"), atom("p"), atom("q")};
    std::set<WorldView> expect{WorldView{interp({"c", "p", "a", "e", "f"})}};

    bool ok = esp_world_views(p, u, SemanticsId::G91) == expect &&
              tdespb_candidates(p, u, SemanticsId::G91) == expect;
    std::string detail = "composition mismatch";

    auto traces = top_traces(detach(split(u, p)), SemanticsId::G91);
    ok = ok && traces.size() == 4;

    std::set<WorldView> interface_wvs;
    for (const auto& t : traces) interface_wvs.insert(t.interface_wv);
    std::set<WorldView> expected_interface{
        WorldView{interp({"kp", "nka", "nkc"})},
        WorldView{interp({"kp", "nka", "kc", "e"})},
        WorldView{interp({"kp", "ka", "nkc", "f"})},
        WorldView{interp({"kp", "ka", "kc", "e", "f"})},
    };
    if (interface_wvs != expected_interface) {
        ok = false;
        detail = "interface world views " + show(interface_wvs);
    }

    // expected (W_t, positive ec, positive rq) table
    auto positives = [](const std::set<SubjectiveLiteral>& e) {
        std::set<SubjectiveLiteral> out;
        for (const auto& l : e)
            if (!l.negated) out.insert(l);
        return out;
    };
    SubjectiveLiteral ka{{atom("a"), Neg::pos}, false};
    SubjectiveLiteral kc{{atom("c"), Neg::pos}, false};
    SubjectiveLiteral kp{{atom("p"), Neg::pos}, false};
    std::map<WorldView, std::set<SubjectiveLiteral>> expected_rq{
        {WorldView{interp({})}, {}},
        {WorldView{interp({"e"})}, {kc}},
        {WorldView{interp({"f"})}, {ka}},
        {WorldView{interp({"e", "f"})}, {kc, ka}},
    };
    if (ok) {
        for (const auto& t : traces) {
            auto it = expected_rq.find(t.top_wv);
            if (it == expected_rq.end() || positives(t.req.rq) != it->second ||
                positives(t.req.ec) != std::set<SubjectiveLiteral>{kp}) {
                ok = false;
                detail = "unexpected trace for top world view " + to_string(t.top_wv);
                break;
            }
        }
    }
    report(3, "layered ELP: esp = tdespb, four interface world views with their ec/rq", ok,
           detail);
}

// 4. the guarded-choice program has no world views under g91, on any route
void criterion4() {
    Program p = parse_program(progs::kPi0);
    std::set<Atom> u = {atom("a"), atom("b")};
    auto direct = world_views(p, SemanticsId::G91);
    auto esp = esp_world_views(p, u, SemanticsId::G91);
    auto tdb = tdespb_candidates(p, u, SemanticsId::G91);
    bool ok = direct.empty() && esp.empty() && tdb.empty();
    report(4, "pi0: direct, esp and tdespb all empty under g91", ok,
           "direct " + show(direct) + "esp " + show(esp) + "tdespb " + show(tdb));
}

// 5. pi1 under k15: the extended candidates select the fulfilling subset
void criterion5() {
    auto got = tdesp_candidates(parse_program(progs::kPi1), {atom("p"), atom("q")},
                                SemanticsId::K15_PAPER);
    bool ok = got == std::set<WorldView>{WorldView{interp({"p"})}};
    report(5, "pi1: tdesp candidates under k15 are [ {p} ]", ok, "got " + show(got));
}

// 6. pi2 under k15: candidate world view plus the reduct fixpoint check
void criterion6() {
    Program p = parse_program(progs::kPi2);
    WorldView w{interp({"p", "q"})};
    auto got = tdesp_candidates(p, {atom("p"), atom("q")}, SemanticsId::K15_PAPER);
    bool candidates_ok = got == std::set<WorldView>{w};
    bool fixpoint_ok = answer_sets(k15_reduct(p, w, SemanticsId::K15_PAPER)) == w;
    report(6, "pi2: tdesp candidates under k15 are [ {p,q} ] and the fixpoint holds",
           candidates_ok && fixpoint_ok, "got " + show(got));
}

// 7. eligibility program: stratified, two-stage composition, fact variant,
//    and agreement of the direct semantics
void criterion7() {
    Program p = parse_program(progs::kPi3);
    std::set<WorldView> expect{
        WorldView{interp({"h", "e", "in", "a"}), interp({"f", "in", "a"})}};
    std::set<Atom> u_top = {atom("e"), atom("m"), atom("f"),
                            atom("h"), atom("ne"), atom("in")};

    bool ok = stratify(p).stratified;
    std::string detail = "stratification not recognized";

    if (ok) {
        // stage one composes the middle layer, stage two feeds it upward
        Program mid;
        mid.rules.assign(p.rules.begin(), p.rules.begin() + 5);
        auto mid_wvs = tdespb_candidates(
            mid, {atom("e"), atom("m"), atom("f"), atom("h"), atom("ne")}, SemanticsId::G91);
        auto two_stage = tdespb_compose(split(u_top, p), mid_wvs, SemanticsId::G91);
        ok = two_stage == expect;
        detail = "two-stage tdespb got " + show(two_stage);
    }
    if (ok) {
        std::set<WorldView> facth_expect{WorldView{interp({"h", "e"})}};
        auto facth = tdesp_candidates(parse_program(progs::kPi3FactH), u_top,
                                      SemanticsId::K15_PAPER);
        ok = facth == facth_expect;
        detail = "fact variant got " + show(facth);
        if (ok) {
            ok = world_views(parse_program(progs::kPi3FactH), SemanticsId::G91) ==
                     facth_expect &&
                 world_views(parse_program(progs::kPi3FactH), SemanticsId::K15_PAPER) ==
                     facth_expect;
            detail = "fact variant direct world views disagree";
        }
    }
    if (ok) {
        ok = world_views(p, SemanticsId::G91) == expect &&
             world_views(p, SemanticsId::K15_PAPER) == expect;
        detail = "direct world views disagree";
    }
    report(7, "eligibility program: stratified, two-stage tdespb, fact variant, direct", ok,
           detail);
}

// 8. on random programs with a nontrivial splitting set, the direct, bottom-up
//    and basic top-down routes coincide under g91
void criterion8() {
    gen::Rng rng(88001);
    gen::Config cfg;
    cfg.max_subjective_forms = 4;
    cfg.max_rules = 8;
    int programs = 0, compositions = 0, mismatches = 0;
    std::string detail;
    while (programs < 200) {
        cfg.num_atoms = gen::pick(rng, 3, 6);
        Program p = gen::random_layered_program(rng, cfg);
        auto universe = p.atom_universe();
        std::vector<std::set<Atom>> nontrivial;
        for (const auto& u : enumerate_splitting_sets(p))
            if (!u.empty() && u != universe && gen::detachable_top(split(u, p)))
                nontrivial.push_back(u);
        if (nontrivial.empty()) continue;
        ++programs;
        auto direct = world_views(p, SemanticsId::G91);
        for (const auto& u : nontrivial) {
            ++compositions;
            if (esp_world_views(p, u, SemanticsId::G91) != direct ||
                tdespb_candidates(p, u, SemanticsId::G91) != direct) {
                ++mismatches;
                if (detail.empty()) detail = "first mismatch on:\n" + p.to_string();
            }
        }
    }
    std::ostringstream label;
    label << "random programs: tdespb = esp = direct under g91 (" << programs
          << " programs, " << compositions << " splittings)";
    report(8, label.str().c_str(), mismatches == 0, detail);
}

// 9. epistemically stratified programs have a unique world view, identical
//    under g91 and k15 and across every splitting composition
void criterion9() {
    gen::Rng rng(99002);
    gen::Config cfg;
    cfg.max_rules = 7;
    int unique = 0, inconsistent = 0, mismatches = 0;
    std::string detail;
    // an inconsistent instance (an objective odd loop, say) has zero world
    // views under every semantics; uniqueness is asserted on the others
    while (unique < 100) {
        cfg.num_atoms = gen::pick(rng, 3, 5);
        Program p = gen::random_stratified_program(rng, cfg);
        if (!stratify(p).stratified) continue; // generator guarantees this
        auto g91 = world_views(p, SemanticsId::G91);
        auto k15 = world_views(p, SemanticsId::K15_PAPER);
        bool ok = g91.size() <= 1 && g91 == k15;
        if (ok) {
            for (const auto& u : enumerate_splitting_sets(p)) {
                bool detachable = gen::detachable_top(split(u, p));
                for (SemanticsId s : {SemanticsId::G91, SemanticsId::K15_PAPER}) {
                    if (esp_world_views(p, u, s) != g91) ok = false;
                    if (detachable && (tdespb_candidates(p, u, s) != g91 ||
                                       tdesp_candidates(p, u, s) != g91))
                        ok = false;
                }
                if (!ok) break;
            }
        }
        if (g91.size() == 1)
            ++unique;
        else
            ++inconsistent;
        if (!ok) {
            ++mismatches;
            if (detail.empty()) detail = "first mismatch on:\n" + p.to_string();
        }
    }
    std::ostringstream label;
    label << "stratified programs: one world view, equal across semantics and splittings ("
          << unique << " programs; " << inconsistent << " inconsistent, empty everywhere)";
    report(9, label.str().c_str(), mismatches == 0, detail);
}

// 10. the answer-set search agrees with exhaustive enumeration, answer sets
//     form an anti-chain, and objective constraints only remove answer sets
void criterion10() {
    gen::Rng rng(10003);
    gen::Config cfg;
    cfg.objective_only = true;
    cfg.max_rules = 8;
    int programs = 0, mismatches = 0;
    std::string detail;
    while (programs < 500) {
        cfg.num_atoms = gen::pick(rng, 2, 10);
        Program p = gen::random_program(rng, cfg);
        ++programs;
        auto fast = answer_sets(p);
        bool ok = fast == oracle::answer_sets(p);
        if (ok) {
            for (const auto& a : fast)
                for (const auto& b : fast)
                    if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                        ok = false;
        }
        if (ok) {
            Program extended = p;
            std::set<Atom> universe = p.atom_universe();
            std::vector<Atom> atoms(universe.begin(), universe.end());
            Rule c;
            c.body_obj.insert({atoms[gen::pick(rng, 0, int(atoms.size()) - 1)],
                               gen::chance(rng, 0.5) ? Neg::neg : Neg::pos});
            extended.rules.push_back(c);
            auto constrained = answer_sets(extended);
            ok = std::includes(fast.begin(), fast.end(), constrained.begin(),
                               constrained.end());
        }
        if (!ok) {
            ++mismatches;
            if (detail.empty()) detail = "first mismatch on:\n" + p.to_string();
        }
    }
    std::ostringstream label;
    label << "random objective programs: oracle equality, anti-chain, constraint "
             "monotonicity ("
          << programs << " programs)";
    report(10, label.str().c_str(), mismatches == 0, detail);
}

// 11. under g91, adding a subjective constraint filters world views exactly
void criterion11() {
    gen::Rng rng(11004);
    gen::Config cfg;
    cfg.max_rules = 6;
    int instances = 0, mismatches = 0;
    std::string detail;
    while (instances < 150) {
        cfg.num_atoms = gen::pick(rng, 2, 6);
        Program p = gen::random_program(rng, cfg);
        Rule constraint = gen::random_subjective_constraint(rng, p);
        ++instances;

        Program extended = p;
        extended.rules.push_back(constraint);

        std::set<WorldView> expect;
        for (const WorldView& w : world_views(p, SemanticsId::G91)) {
            bool body_satisfied = std::all_of(
                constraint.body_subj.begin(), constraint.body_subj.end(),
                [&](const SubjectiveLiteral& l) { return wv_satisfies(w, l); });
            if (!body_satisfied) expect.insert(w); // w satisfies the constraint
        }
        if (world_views(extended, SemanticsId::G91) != expect) {
            ++mismatches;
            if (detail.empty())
                detail = "first mismatch on:\n" + p.to_string() + constraint.to_string();
        }
    }
    std::ostringstream label;
    label << "subjective constraint monotonicity under g91 (" << instances << " instances)";
    report(11, label.str().c_str(), mismatches == 0, detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (g_failures == 0)
        std::printf("acceptance: all 11 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
