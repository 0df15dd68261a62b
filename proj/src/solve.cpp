#include "elp/solve.hpp"

#include "elp/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace elp {

std::string to_string(const Interpretation& i) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : i) {
        if (!first) out += ",";
        out += a.to_string();
        first = false;
    }
    out += "}";
    return out;
}

bool literal_true(const ObjectiveLiteral& l, const Interpretation& i) {
    bool value;
    if (l.atom.is_truth_constant())
        value = l.atom.is_top();
    else
        value = i.count(l.atom) > 0;
    switch (l.neg) {
        case Neg::pos: return value;
        case Neg::neg: return !value;
        case Neg::negneg: return value;
    }
    return false;
}

namespace {

void require_objective_ground(const Program& p, const char* op) {
    for (const auto& r : p.rules)
        if (!r.is_objective())
            throw PreconditionError(std::string(op) + ": program contains subjective literals");
    if (!p.is_ground()) throw PreconditionError(std::string(op) + ": program is not ground");
}

bool body_true(const Rule& r, const Interpretation& i) {
    return std::all_of(r.body_obj.begin(), r.body_obj.end(),
                       [&](const ObjectiveLiteral& l) { return literal_true(l, i); });
}

bool head_true(const Rule& r, const Interpretation& i) {
    return std::any_of(r.head.begin(), r.head.end(), [&](const Atom& a) {
        return a.is_truth_constant() ? a.is_top() : i.count(a) > 0;
    });
}

} // namespace

bool is_classical_model(const Program& p, const Interpretation& i) {
    require_objective_ground(p, "is_classical_model");
    for (const auto& r : p.rules)
        if (body_true(r, i) && !head_true(r, i)) return false;
    return true;
}

Program gl_reduct(const Program& p, const Interpretation& i) {
    require_objective_ground(p, "gl_reduct");
    Program out;
    for (const auto& r : p.rules) {
        bool removed = false;
        Rule s;
        s.head = r.head;
        for (const auto& l : r.body_obj) {
            if (l.neg == Neg::pos) {
                s.body_obj.insert(l);
                continue;
            }
            // negative literal: drop the rule when it is false w.r.t. i
            if (!literal_true(l, i)) {
                removed = true;
                break;
            }
        }
        if (!removed) out.rules.push_back(s);
    }
    return out;
}

Interpretation least_model(const Program& p) {
    require_objective_ground(p, "least_model");
    for (const auto& r : p.rules) {
        if (r.head.size() > 1) throw PreconditionError("least_model: disjunctive head present");
        for (const auto& l : r.body_obj)
            if (l.neg != Neg::pos) throw PreconditionError("least_model: program is not positive");
    }
    Interpretation closure;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules) {
            if (r.is_constraint()) continue;
            if (!body_true(r, closure)) continue;
            const Atom& h = *r.head.begin();
            if (h.is_truth_constant()) continue;
            if (closure.insert(h).second) changed = true;
        }
    }
    for (const auto& r : p.rules)
        if (r.is_constraint() && body_true(r, closure))
            throw UnsatisfiableError("least_model: constraint violated: " + r.to_string());
    return closure;
}

// ---------------------------------------------------------------------------
// Answer sets via compiled bitmask enumeration
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxEnumAtoms = 20;

struct CompiledRule {
    std::uint32_t head = 0;
    std::uint32_t body_pos = 0;
    std::uint32_t body_neg = 0;     // "not a"
    std::uint32_t body_negneg = 0;  // "not not a"
    bool head_empty = true;
};

struct CompiledProgram {
    std::vector<Atom> atoms; // bit index -> atom
    std::vector<CompiledRule> rules;

    // rules of the GL-reduct w.r.t. candidate that remain applicable
    bool model_of_reduct(std::uint32_t candidate, std::uint32_t world) const {
        for (const auto& r : rules) {
            if ((r.body_neg & world) != 0) continue;             // reduct drops the rule
            if ((r.body_negneg & world) != r.body_negneg) continue;
            if ((r.body_pos & candidate) != r.body_pos) continue;
            if (r.head_empty || (r.head & candidate) == 0) return false;
        }
        return true;
    }
};

CompiledProgram compile(const Program& p) {
    CompiledProgram cp;
    std::map<Atom, std::uint32_t> index;
    std::set<Atom> universe = p.atom_universe();
    if (universe.size() > kMaxEnumAtoms)
        throw CapExceededError("answer_sets: atom universe exceeds " +
                               std::to_string(kMaxEnumAtoms) + " atoms");
    for (const auto& a : universe) {
        index[a] = static_cast<std::uint32_t>(cp.atoms.size());
        cp.atoms.push_back(a);
    }
    for (const auto& r : p.rules) {
        CompiledRule cr;
        for (const auto& a : r.head) {
            cr.head |= 1u << index.at(a);
            cr.head_empty = false;
        }
        for (const auto& l : r.body_obj) {
            std::uint32_t bit = 1u << index.at(l.atom);
            switch (l.neg) {
                case Neg::pos: cr.body_pos |= bit; break;
                case Neg::neg: cr.body_neg |= bit; break;
                case Neg::negneg: cr.body_negneg |= bit; break;
            }
        }
        cp.rules.push_back(cr);
    }
    return cp;
}

} // namespace

std::set<Interpretation> answer_sets(const Program& p) {
    require_objective_ground(p, "answer_sets");
    Program simplified = simplify_constants(p);
    CompiledProgram cp = compile(simplified);
    const std::size_t n = cp.atoms.size();

    std::vector<std::uint32_t> found;
    // ascending cardinality, with anti-chain pruning
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint32_t mask = (k == 0) ? 0 : (1u << k) - 1;
        const std::uint32_t limit = static_cast<std::uint32_t>(1u << n);
        while (true) {
            if (std::none_of(found.begin(), found.end(),
                             [&](std::uint32_t as) { return (as & mask) == as; })) {
                if (cp.model_of_reduct(mask, mask)) {
                    // minimality: no proper subset of mask models the reduct w.r.t. mask
                    bool minimal = true;
                    if (mask != 0) {
                        for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
                            if (cp.model_of_reduct(sub, mask)) {
                                minimal = false;
                                break;
                            }
                            if (sub == 0) break;
                        }
                    }
                    if (minimal) found.push_back(mask);
                }
            }
            if (k == 0) break;
            // next k-subset (Gosper's hack)
            std::uint32_t c = mask & static_cast<std::uint32_t>(-static_cast<std::int32_t>(mask));
            std::uint32_t r = mask + c;
            if (r >= limit) break;
            mask = (((r ^ mask) >> 2) / c) | r;
            if (mask >= limit) break;
        }
    }

    std::set<Interpretation> out;
    for (std::uint32_t as : found) {
        Interpretation i;
        for (std::size_t b = 0; b < n; ++b)
            if (as & (1u << b)) i.insert(cp.atoms[b]);
        out.insert(i);
    }
    return out;
}

} // namespace elp
