#include "elp/semantics.hpp"

#include "elp/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace elp {

std::string to_string(const WorldView& w) {
    std::string out = "[";
    for (const auto& i : w) {
        out += " ";
        out += to_string(i);
    }
    out += " ]";
    return out;
}

std::string to_string(SemanticsId s) {
    switch (s) {
        case SemanticsId::G91: return "g91";
        case SemanticsId::K15_PAPER: return "k15";
        case SemanticsId::K15_CLASSIC: return "k15-classic";
        case SemanticsId::S16: return "s16";
    }
    return {};
}

std::optional<SemanticsId> semantics_from_string(std::string_view name) {
    if (name == "g91") return SemanticsId::G91;
    if (name == "k15") return SemanticsId::K15_PAPER;
    if (name == "k15-classic") return SemanticsId::K15_CLASSIC;
    if (name == "s16") return SemanticsId::S16;
    return std::nullopt;
}

bool wv_satisfies(const WorldView& w, const ObjectiveLiteral& inner) {
    return std::all_of(w.begin(), w.end(),
                       [&](const Interpretation& i) { return literal_true(inner, i); });
}

bool wv_satisfies(const WorldView& w, const SubjectiveLiteral& l) {
    bool k = wv_satisfies(w, l.inner);
    return l.negated ? !k : k;
}

std::set<ObjectiveLiteral> epistemic_atoms(const Program& p) {
    std::set<ObjectiveLiteral> out;
    for (const auto& r : p.rules)
        for (const auto& l : r.body_subj) out.insert(l.inner);
    return out;
}

namespace {

ObjectiveLiteral negate(const ObjectiveLiteral& l) {
    switch (l.neg) {
        case Neg::pos: return {l.atom, Neg::neg};
        case Neg::neg: return {l.atom, Neg::negneg};
        case Neg::negneg: return {l.atom, Neg::neg}; // never produced by reducts
    }
    return l;
}

const ObjectiveLiteral kTop{Atom{"top", {}}, Neg::pos};
const ObjectiveLiteral kBot{Atom{"bot", {}}, Neg::pos};

/// Builds an objective program by mapping every subjective body literal to an
/// objective literal, given the truth of its epistemic atom K L.
Program substitute_subjective(const Program& p,
                              const std::function<bool(const ObjectiveLiteral&)>& k_true,
                              SemanticsId s) {
    Program out;
    for (const auto& r : p.rules) {
        Rule nr;
        nr.head = r.head;
        nr.body_obj = r.body_obj;
        for (const auto& l : r.body_subj) {
            bool k = k_true(l.inner);
            ObjectiveLiteral repl;
            switch (s) {
                case SemanticsId::G91:
                    repl = (l.negated ? !k : k) ? kTop : kBot;
                    break;
                case SemanticsId::K15_PAPER:
                    // occurrence-level: K L -> L when satisfied, bot otherwise;
                    // the outer default negation stays in place
                    if (!l.negated)
                        repl = k ? l.inner : kBot;
                    else
                        repl = k ? negate(l.inner) : kTop;
                    break;
                case SemanticsId::K15_CLASSIC:
                    if (!l.negated)
                        repl = k ? l.inner : kBot;
                    else
                        repl = k ? kBot : kTop;
                    break;
                case SemanticsId::S16:
                    throw PreconditionError("S16 has no reduct of its own; use K15_PAPER");
            }
            nr.body_obj.insert(repl);
        }
        out.rules.push_back(nr);
    }
    return out;
}

} // namespace

Program g91_reduct(const Program& p, const WorldView& w) {
    return substitute_subjective(
        p, [&](const ObjectiveLiteral& inner) { return wv_satisfies(w, inner); },
        SemanticsId::G91);
}

Program k15_reduct(const Program& p, const WorldView& w, SemanticsId variant) {
    if (variant != SemanticsId::K15_PAPER && variant != SemanticsId::K15_CLASSIC)
        throw PreconditionError("k15_reduct: variant must be K15_PAPER or K15_CLASSIC");
    return substitute_subjective(
        p, [&](const ObjectiveLiteral& inner) { return wv_satisfies(w, inner); }, variant);
}

std::set<WorldView> world_views(const Program& p, SemanticsId s, WorldViewOptions opt) {
    if (!p.is_ground()) throw PreconditionError("world_views: program is not ground");
    if (s == SemanticsId::S16) return s16_filter(world_views(p, SemanticsId::K15_PAPER, opt), p);

    std::set<ObjectiveLiteral> atoms = epistemic_atoms(p);
    std::vector<ObjectiveLiteral> ks(atoms.begin(), atoms.end());
    if (ks.size() > static_cast<std::size_t>(opt.max_subjective))
        throw CapExceededError("world_views: " + std::to_string(ks.size()) +
                               " distinct subjective literals exceed the cap of " +
                               std::to_string(opt.max_subjective));

    std::set<WorldView> out;
    const std::uint64_t guesses = std::uint64_t(1) << ks.size();
    for (std::uint64_t g = 0; g < guesses; ++g) {
        std::map<ObjectiveLiteral, bool> truth;
        for (std::size_t i = 0; i < ks.size(); ++i) truth[ks[i]] = (g >> i) & 1;

        Program reduct = substitute_subjective(
            p, [&](const ObjectiveLiteral& inner) { return truth.at(inner); }, s);
        std::set<Interpretation> w = answer_sets(reduct);
        if (w.empty()) continue;

        bool consistent = std::all_of(ks.begin(), ks.end(), [&](const ObjectiveLiteral& inner) {
            return wv_satisfies(w, inner) == truth.at(inner);
        });
        if (consistent) out.insert(w);
    }
    return out;
}

std::set<WorldView> s16_filter(const std::set<WorldView>& candidates, const Program& p) {
    std::set<ObjectiveLiteral> ks = epistemic_atoms(p);
    auto unknown = [&](const WorldView& w) {
        std::set<ObjectiveLiteral> u;
        for (const auto& inner : ks)
            if (!wv_satisfies(w, inner)) u.insert(inner);
        return u;
    };

    std::set<WorldView> out;
    for (const auto& w : candidates) {
        std::set<ObjectiveLiteral> uw = unknown(w);
        bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const WorldView& v) {
            std::set<ObjectiveLiteral> uv = unknown(v);
            return uw != uv && std::includes(uv.begin(), uv.end(), uw.begin(), uw.end());
        });
        if (!dominated) out.insert(w);
    }
    return out;
}

} // namespace elp
