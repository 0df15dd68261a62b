#ifndef ELP_SYNTAX_HPP
#define ELP_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace elp {

/// A term is a constant (lowercase identifier) or a variable (uppercase identifier).
struct Term {
    bool is_variable = false;
    std::string name;

    auto operator<=>(const Term&) const = default;
};

/// A (possibly non-ground) atom: predicate plus an ordered list of terms.
///
/// The nullary predicates "top" and "bot" are reserved truth constants. They
/// never enter the atom universe; "bot" as a rule head encodes a constraint,
/// and either may appear in rule bodies (reducts introduce them).
struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool is_ground() const;
    bool is_truth_constant() const { return args.empty() && (predicate == "top" || predicate == "bot"); }
    bool is_top() const { return args.empty() && predicate == "top"; }
    bool is_bot() const { return args.empty() && predicate == "bot"; }
    std::string to_string() const;

    auto operator<=>(const Atom&) const = default;
};

/// Convenience constructor for ground atoms: `atom("p")`, `atom("q", {"a","b"})`.
Atom atom(std::string predicate, std::vector<std::string> constant_args = {});

/// Parses a single ground atom from text ("p", "eligible(mike)").
Atom parse_atom(std::string_view text);

/// Default-negation prefix of a body literal. Double negation is not part of
/// the input grammar; it only arises when a reduct substitutes an objective
/// literal into "not K L".
enum class Neg { pos, neg, negneg };

struct ObjectiveLiteral {
    Atom atom;
    Neg neg = Neg::pos;

    bool negated() const { return neg != Neg::pos; }
    std::string to_string() const;

    auto operator<=>(const ObjectiveLiteral&) const = default;
};

/// A subjective literal: K L or not K L, with L an objective literal
/// (no nesting; L itself is at most singly negated).
struct SubjectiveLiteral {
    ObjectiveLiteral inner; // inner.neg is pos or neg
    bool negated = false;   // true encodes "not K L"

    SubjectiveLiteral complement() const { return {inner, !negated}; }
    std::string to_string() const;

    auto operator<=>(const SubjectiveLiteral&) const = default;
};

struct Rule {
    std::set<Atom> head; // empty set encodes a constraint
    std::set<ObjectiveLiteral> body_obj;
    std::set<SubjectiveLiteral> body_subj;

    bool is_fact() const { return body_obj.empty() && body_subj.empty(); }
    bool is_constraint() const { return head.empty(); }
    bool is_subjective_rule() const { return body_obj.empty() && !body_subj.empty(); }
    bool is_subjective_constraint() const { return head.empty() && !body_subj.empty(); }
    bool is_objective() const { return body_subj.empty(); }
    bool is_positive() const;
    bool is_disjunctive() const { return head.size() > 1; }

    /// All atoms occurring in the rule, truth constants excluded.
    std::set<Atom> atoms() const;
    std::set<Atom> head_and_objective_body_atoms() const;
    std::set<Atom> subjective_body_atoms() const;

    std::string to_string() const;

    auto operator<=>(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;

    bool is_ground() const;
    bool is_objective() const;

    /// The atom universe At: every ground atom occurring anywhere in the
    /// program (truth constants excluded).
    std::set<Atom> atom_universe() const;

    std::set<Rule> rule_set() const { return {rules.begin(), rules.end()}; }

    /// Canonical text, one rule per line, atoms sorted inside heads and bodies.
    std::string to_string() const;

    auto operator<=>(const Program&) const = default;
};

/// Parses program text. Grammar (whitespace-insensitive, '%' line comments):
///
///   program := { rule } ;
///   rule    := [ head ] [ ":-" body ] "." ;
///   head    := "bot" | atom { "|" atom } ;
///   body    := lit { "," lit } ;
///   lit     := [ "not" ] [ "K" ] [ "not" ] atom ;   (second "not" only after "K")
///   atom    := ident [ "(" term { "," term } ")" ] ;
///
/// Constants and predicates match [a-z][A-Za-z0-9_]*, variables [A-Z][A-Za-z0-9_]*.
/// "K", "not", "top" and "bot" are reserved. A bare ":- body." is a constraint;
/// a head consisting of "bot" (or the UTF-8 falsum sign) is normalized to the
/// empty head. Rules are kept in source order, duplicates preserved.
Program parse_program(std::string_view text);

/// Naive grounding: every variable is replaced by every constant occurring in
/// the program, in all combinations. Duplicate ground rules are dropped
/// (first occurrence wins). Throws PreconditionError if variables occur but
/// the program has no constants.
Program ground(const Program& p);

/// A structural warning produced by validate_elp.
struct Diagnostic {
    std::size_t rule_index; // index of the offending constraint in p.rules
    Atom via;               // objective body atom through which the dependency runs
    std::string message;
};

/// Checks the standing assumption that constraints depend on subjective
/// literals only directly (plain form): reports every constraint whose
/// objective body atoms reach, in the program's dependency graph, an atom
/// defined by a rule with subjective body literals.
std::vector<Diagnostic> validate_elp(const Program& p);

/// Drops body occurrences of "top", drops rules whose body contains "bot"
/// (or "not top"), and maps a bare "bot" head to the empty head. Used by the
/// solvers; reduct operations keep the constants visible instead.
Program simplify_constants(const Program& p);

} // namespace elp

#endif
