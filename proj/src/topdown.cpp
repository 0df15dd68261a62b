#include "elp/topdown.hpp"

#include "elp/errors.hpp"

#include <algorithm>

namespace elp {

Interpretation DetachedTop::strip(const Interpretation& i) const {
    Interpretation out;
    for (const auto& a : i)
        if (!fresh_atoms.count(a)) out.insert(a);
    return out;
}

WorldView DetachedTop::strip(const WorldView& w) const {
    WorldView out;
    for (const auto& i : w) out.insert(strip(i));
    return out;
}

std::set<SubjectiveLiteral> interface_literals(const Splitting& sp) {
    std::set<Atom> bottom_atoms = sp.bottom.atom_universe();
    std::set<SubjectiveLiteral> out;
    for (const auto& r : sp.top.rules)
        for (const auto& l : r.body_subj)
            if (bottom_atoms.count(l.inner.atom)) {
                out.insert({l.inner, false});
                out.insert({l.inner, true});
            }
    return out;
}

namespace {

std::string mangle(const Atom& a) {
    std::string out = a.predicate;
    for (const auto& t : a.args) {
        out += "_";
        out += t.name;
    }
    return out;
}

Atom fresh_atom(const std::string& base, const std::set<Atom>& taken) {
    Atom a = atom(base);
    for (int suffix = 2; taken.count(a); ++suffix) a = atom(base + std::to_string(suffix));
    return a;
}

} // namespace

DetachedTop detach(const Splitting& sp) {
    DetachedTop dt;
    std::set<Atom> taken = sp.top.atom_universe();
    {
        auto bottom_atoms = sp.bottom.atom_universe();
        taken.insert(bottom_atoms.begin(), bottom_atoms.end());
    }

    std::set<SubjectiveLiteral> fu = interface_literals(sp);
    for (const auto& l : fu) {
        if (l.negated) continue; // one pair per inner literal
        std::string base = (l.inner.neg == Neg::pos ? "" : "_not_") + mangle(l.inner.atom);
        Atom kl = fresh_atom("k" + base, taken);
        taken.insert(kl);
        Atom nkl = fresh_atom("nk" + base, taken);
        taken.insert(nkl);
        dt.interface[l.inner] = {kl, nkl};
        dt.fresh_atoms.insert(kl);
        dt.fresh_atoms.insert(nkl);
    }

    for (const auto& r : sp.top.rules) {
        Rule nr;
        nr.head = r.head;
        nr.body_obj = r.body_obj;
        for (const auto& l : r.body_subj) {
            auto it = dt.interface.find(l.inner);
            if (it == dt.interface.end()) {
                nr.body_subj.insert(l); // local epistemic literal, kept as is
                continue;
            }
            const Atom& detached = l.negated ? it->second.second : it->second.first;
            nr.body_obj.insert(ObjectiveLiteral{detached, Neg::pos});
        }
        dt.program.rules.push_back(nr);
    }
    for (const auto& [inner, pair] : dt.interface) {
        Rule fact;
        fact.head.insert(pair.first);
        fact.head.insert(pair.second);
        dt.program.rules.push_back(fact);
    }
    return dt;
}

std::vector<WorldView> interface_world_views(const DetachedTop& dt, SemanticsId s,
                                             WorldViewOptions opt) {
    std::set<WorldView> result;
    for (const WorldView& w : world_views(dt.program, s, opt)) {
        std::vector<WorldView> fragments{w};
        for (const auto& [inner, pair] : dt.interface) {
            std::vector<WorldView> next;
            for (const auto& frag : fragments) {
                WorldView with_kl, with_nkl;
                for (const auto& bs : frag)
                    (bs.count(pair.first) ? with_kl : with_nkl).insert(bs);
                if (!with_kl.empty()) next.push_back(with_kl);
                if (!with_nkl.empty()) next.push_back(with_nkl);
            }
            fragments = std::move(next);
        }
        result.insert(fragments.begin(), fragments.end());
    }
    return {result.begin(), result.end()};
}

RequisiteSets requisite_sets(const WorldView& w_prime, const DetachedTop& dt) {
    // pairs whose fresh atoms occur in some constraint of T'_U
    std::set<Atom> constraint_atoms;
    for (const auto& r : dt.program.rules)
        if (r.is_constraint())
            for (const auto& l : r.body_obj)
                if (dt.fresh_atoms.count(l.atom)) constraint_atoms.insert(l.atom);

    RequisiteSets out;
    for (const auto& [inner, pair] : dt.interface) {
        bool all_kl = true, all_nkl = true;
        for (const auto& bs : w_prime) {
            bool has_kl = bs.count(pair.first), has_nkl = bs.count(pair.second);
            if (has_kl && has_nkl)
                throw PreconditionError("requisite_sets: world view not homogeneous on pair " +
                                        pair.first.to_string() + "/" + pair.second.to_string());
            all_kl = all_kl && has_kl;
            all_nkl = all_nkl && has_nkl;
        }
        if (!all_kl && !all_nkl)
            throw PreconditionError("requisite_sets: world view not homogeneous on pair " +
                                    pair.first.to_string() + "/" + pair.second.to_string());
        SubjectiveLiteral member{inner, /*negated=*/!all_kl};
        out.es.insert(member);
        bool in_constraint = constraint_atoms.count(pair.first) || constraint_atoms.count(pair.second);
        (in_constraint ? out.ec : out.rq).insert(member);
    }
    return out;
}

bool fulfills(const WorldView& w, const std::set<SubjectiveLiteral>& e) {
    return std::all_of(e.begin(), e.end(), [&](const SubjectiveLiteral& l) {
        bool k = wv_satisfies(w, l.inner);
        return l.negated ? !k : k;
    });
}

Program top_down_influence(const Program& bottom, const std::set<SubjectiveLiteral>& ec) {
    std::set<ObjectiveLiteral> forced;
    for (const auto& l : ec)
        if (!l.negated) forced.insert(l.inner);

    Program out;
    for (const auto& r : bottom.rules) {
        Rule nr;
        nr.head = r.head;
        nr.body_obj = r.body_obj;
        for (const auto& l : r.body_subj) {
            if (!forced.count(l.inner)) {
                nr.body_subj.insert(l);
                continue;
            }
            ObjectiveLiteral repl = l.inner;
            if (l.negated) // "not K L" -> "not L"
                repl.neg = (repl.neg == Neg::pos) ? Neg::neg : Neg::negneg;
            nr.body_obj.insert(repl);
        }
        out.rules.push_back(nr);
    }
    return out;
}

std::vector<TopTrace> top_traces(const DetachedTop& dt, SemanticsId s, WorldViewOptions opt) {
    std::vector<TopTrace> out;
    for (const WorldView& wp : interface_world_views(dt, s, opt))
        out.push_back({wp, dt.strip(wp), requisite_sets(wp, dt)});
    return out;
}

std::set<WorldView> tdespb_compose(const Splitting& sp, const std::set<WorldView>& bottom_wvs,
                                   SemanticsId s, WorldViewOptions opt) {
    DetachedTop dt = detach(sp);
    std::set<WorldView> out;
    for (const TopTrace& t : top_traces(dt, s, opt))
        for (const WorldView& wb : bottom_wvs)
            if (fulfills(wb, t.req.es)) out.insert(wbt(wb, t.top_wv));
    return out;
}

std::set<WorldView> tdespb_candidates(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                      WorldViewOptions opt) {
    Splitting sp = split(u, p);
    return tdespb_compose(sp, world_views(sp.bottom, s, opt), s, opt);
}

namespace {

constexpr std::size_t kMaxSubsetBase = 16;

/// Belief sets of wb that satisfy every positive member of es; any fulfilling
/// subset of wb is a subset of this, so it is the unique maximal candidate.
WorldView positive_core(const WorldView& wb, const std::set<SubjectiveLiteral>& es) {
    WorldView core;
    for (const auto& bs : wb) {
        bool ok = std::all_of(es.begin(), es.end(), [&](const SubjectiveLiteral& l) {
            return l.negated || literal_true(l.inner, bs);
        });
        if (ok) core.insert(bs);
    }
    return core;
}

} // namespace

std::set<WorldView> tdesp_candidates(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                     SubsetPolicy policy, WorldViewOptions opt) {
    Splitting sp = split(u, p);
    DetachedTop dt = detach(sp);
    std::set<WorldView> out;
    for (const TopTrace& t : top_traces(dt, s, opt)) {
        Program influenced = top_down_influence(sp.bottom, t.req.ec);
        for (const WorldView& wb : world_views(influenced, s, opt)) {
            if (t.req.ec.empty()) {
                // the entire bottom world view, which must fulfill RQ (= ES here)
                if (fulfills(wb, t.req.es)) out.insert(wbt(wb, t.top_wv));
                continue;
            }
            WorldView core = positive_core(wb, t.req.es);
            if (core.empty()) continue;
            if (policy == SubsetPolicy::maximal) {
                if (fulfills(core, t.req.es)) out.insert(wbt(core, t.top_wv));
                continue;
            }
            // every non-empty fulfilling subset
            if (core.size() > kMaxSubsetBase)
                throw CapExceededError("tdesp_candidates: subset enumeration over " +
                                       std::to_string(core.size()) + " belief sets");
            std::vector<Interpretation> base(core.begin(), core.end());
            const std::uint64_t limit = std::uint64_t(1) << base.size();
            for (std::uint64_t mask = 1; mask < limit; ++mask) {
                WorldView wbv;
                for (std::size_t i = 0; i < base.size(); ++i)
                    if ((mask >> i) & 1) wbv.insert(base[i]);
                if (fulfills(wbv, t.req.es)) out.insert(wbt(wbv, t.top_wv));
            }
        }
    }
    return out;
}

EquivalenceReport check_equivalence(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                    SubsetPolicy policy, WorldViewOptions opt,
                                    std::string program_id) {
    Splitting sp = split(u, p); // validates u before any heavy work
    EquivalenceReport rep;
    rep.program_id = std::move(program_id);
    rep.u = u;
    rep.semantics = s;
    rep.policy = policy;
    rep.direct = world_views(p, s, opt);
    rep.esp = esp_world_views(p, u, s, opt);
    rep.tdespb = tdespb_candidates(p, u, s, opt);
    rep.tdesp = tdesp_candidates(p, u, s, policy, opt);
    rep.traces = top_traces(detach(sp), s, opt);
    return rep;
}

} // namespace elp
