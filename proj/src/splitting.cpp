#include "elp/splitting.hpp"

#include "elp/errors.hpp"

#include <algorithm>

namespace elp {

namespace {

bool condition1(const Rule& r, const std::set<Atom>& u) {
    std::set<Atom> as = r.atoms();
    return std::includes(u.begin(), u.end(), as.begin(), as.end());
}

bool condition2(const Rule& r, const std::set<Atom>& u) {
    for (const auto& a : r.head_and_objective_body_atoms())
        if (u.count(a)) return false;
    return true;
}

} // namespace

bool is_splitting_set(const std::set<Atom>& u, const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(),
                       [&](const Rule& r) { return condition1(r, u) || condition2(r, u); });
}

Splitting split(const std::set<Atom>& u, const Program& p) {
    Splitting sp;
    sp.u = u;
    for (const auto& r : p.rules) {
        bool c1 = condition1(r, u);
        bool c2 = condition2(r, u);
        if (!c1 && !c2)
            throw InvalidSplittingError("not an epistemic splitting set: rule '" + r.to_string() +
                                        "' satisfies neither condition");
        // rules satisfying both conditions have no objective atoms; the
        // subjective ones (subjective rules and constraints) belong to the top
        bool to_top = c2 && (!c1 || !r.body_subj.empty());
        (to_top ? sp.top : sp.bottom).rules.push_back(r);
    }
    return sp;
}

std::vector<std::set<Atom>> enumerate_splitting_sets(const Program& p, SplittingOptions opt) {
    std::vector<Atom> atoms;
    for (const auto& a : p.atom_universe()) atoms.push_back(a);
    if (atoms.size() > static_cast<std::size_t>(opt.max_atoms))
        throw CapExceededError("enumerate_splitting_sets: " + std::to_string(atoms.size()) +
                               " atoms exceed the cap of " + std::to_string(opt.max_atoms));
    std::vector<std::set<Atom>> out;
    const std::uint64_t limit = std::uint64_t(1) << atoms.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::set<Atom> u;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if ((mask >> i) & 1) u.insert(atoms[i]);
        if (is_splitting_set(u, p)) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Program subjective_reduct(const Program& top, const std::set<Atom>& u, const WorldView& w) {
    Program out;
    for (const auto& r : top.rules) {
        Rule nr;
        nr.head = r.head;
        nr.body_obj = r.body_obj;
        for (const auto& l : r.body_subj) {
            if (!u.count(l.inner.atom)) {
                nr.body_subj.insert(l); // not referring to the bottom signature
                continue;
            }
            bool sat = wv_satisfies(w, l);
            nr.body_obj.insert(ObjectiveLiteral{Atom{sat ? "top" : "bot", {}}, Neg::pos});
        }
        out.rules.push_back(nr);
    }
    return out;
}

WorldView wbt(const WorldView& wb, const WorldView& wt) {
    WorldView out;
    for (const auto& ib : wb)
        for (const auto& it : wt) {
            Interpretation u = ib;
            u.insert(it.begin(), it.end());
            out.insert(u);
        }
    return out;
}

std::set<WorldView> esp_world_views(const Program& p, const std::set<Atom>& u, SemanticsId s,
                                    WorldViewOptions opt) {
    Splitting sp = split(u, p);
    std::set<WorldView> out;
    for (const WorldView& wb : world_views(sp.bottom, s, opt)) {
        Program eu = subjective_reduct(sp.top, u, wb);
        for (const WorldView& wt : world_views(eu, s, opt)) out.insert(wbt(wb, wt));
    }
    return out;
}

} // namespace elp
