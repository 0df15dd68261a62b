#include "elp/syntax.hpp"

#include "elp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace elp {

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable; });
}

std::string Atom::to_string() const {
    if (args.empty()) return predicate;
    std::string out = predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i].name;
    }
    out += ")";
    return out;
}

Atom atom(std::string predicate, std::vector<std::string> constant_args) {
    Atom a;
    a.predicate = std::move(predicate);
    for (auto& c : constant_args) a.args.push_back(Term{false, std::move(c)});
    return a;
}

std::string ObjectiveLiteral::to_string() const {
    switch (neg) {
        case Neg::pos: return atom.to_string();
        case Neg::neg: return "not " + atom.to_string();
        case Neg::negneg: return "not not " + atom.to_string();
    }
    return {};
}

std::string SubjectiveLiteral::to_string() const {
    std::string out = negated ? "not K " : "K ";
    return out + inner.to_string();
}

bool Rule::is_positive() const {
    return body_subj.empty() &&
           std::none_of(body_obj.begin(), body_obj.end(),
                        [](const ObjectiveLiteral& l) { return l.negated(); });
}

std::set<Atom> Rule::atoms() const {
    std::set<Atom> out;
    for (const auto& a : head)
        if (!a.is_truth_constant()) out.insert(a);
    for (const auto& l : body_obj)
        if (!l.atom.is_truth_constant()) out.insert(l.atom);
    for (const auto& l : body_subj)
        if (!l.inner.atom.is_truth_constant()) out.insert(l.inner.atom);
    return out;
}

std::set<Atom> Rule::head_and_objective_body_atoms() const {
    std::set<Atom> out;
    for (const auto& a : head)
        if (!a.is_truth_constant()) out.insert(a);
    for (const auto& l : body_obj)
        if (!l.atom.is_truth_constant()) out.insert(l.atom);
    return out;
}

std::set<Atom> Rule::subjective_body_atoms() const {
    std::set<Atom> out;
    for (const auto& l : body_subj)
        if (!l.inner.atom.is_truth_constant()) out.insert(l.inner.atom);
    return out;
}

std::string Rule::to_string() const {
    std::ostringstream out;
    if (head.empty() && is_fact()) {
        // unconditional falsum
        return "bot.";
    }
    bool first = true;
    for (const auto& a : head) {
        if (!first) out << " | ";
        out << a.to_string();
        first = false;
    }
    if (!body_obj.empty() || !body_subj.empty()) {
        if (!head.empty()) out << " ";
        out << ":- ";
        first = true;
        for (const auto& l : body_obj) {
            if (!first) out << ", ";
            out << l.to_string();
            first = false;
        }
        for (const auto& l : body_subj) {
            if (!first) out << ", ";
            out << l.to_string();
            first = false;
        }
    }
    out << ".";
    return out.str();
}

bool Program::is_ground() const {
    for (const auto& r : rules)
        for (const auto& a : r.atoms())
            if (!a.is_ground()) return false;
    return true;
}

bool Program::is_objective() const {
    return std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_objective(); });
}

std::set<Atom> Program::atom_universe() const {
    std::set<Atom> out;
    for (const auto& r : rules)
        for (const auto& a : r.atoms())
            if (a.is_ground()) out.insert(a);
    return out;
}

std::string Program::to_string() const {
    std::string out;
    for (const auto& r : rules) {
        out += r.to_string();
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

const char* kFalsumUtf8 = "\xe2\x8a\xa5"; // U+22A5

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    struct Token {
        enum Kind { Ident, Var, LParen, RParen, Comma, Pipe, Dot, If, Falsum, End } kind;
        std::string value;
        std::size_t line, col;
    };

    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos < text.size(); ++i, ++pos) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }

    void skip_space_and_comments() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '%') {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line, col, message); }

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line;
        t.col = col;
        if (pos >= text.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = text[pos];
        if (c == '(') { t.kind = Token::LParen; advance(); return t; }
        if (c == ')') { t.kind = Token::RParen; advance(); return t; }
        if (c == ',') { t.kind = Token::Comma; advance(); return t; }
        if (c == '|') { t.kind = Token::Pipe; advance(); return t; }
        if (c == '.') { t.kind = Token::Dot; advance(); return t; }
        if (c == ':') {
            if (pos + 1 < text.size() && text[pos + 1] == '-') {
                t.kind = Token::If;
                advance(2);
                return t;
            }
            fail("expected ':-'");
        }
        if (text.substr(pos, 3) == kFalsumUtf8) {
            t.kind = Token::Falsum;
            advance(3);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                advance();
            t.value = std::string(text.substr(start, pos - start));
            t.kind = std::isupper(static_cast<unsigned char>(c)) ? Token::Var : Token::Ident;
            return t;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_{text} { shift(); }

    Program parse() {
        Program p;
        while (tok_.kind != Lexer::Token::End) p.rules.push_back(parse_rule());
        return p;
    }

private:
    using Token = Lexer::Token;

    Lexer lex_;
    Token tok_;

    void shift() { tok_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(tok_.line, tok_.col, message);
    }

    void expect(Token::Kind kind, const char* what) {
        if (tok_.kind != kind) fail(std::string("expected ") + what);
        shift();
    }

    bool is_keyword(const char* kw) const {
        return (tok_.kind == Token::Ident || tok_.kind == Token::Var) && tok_.value == kw;
    }

    Atom parse_atom_body(bool allow_truth_constants) {
        if (tok_.kind == Token::Var) {
            if (tok_.value == "K") fail("epistemic operator K is not allowed here");
            fail("expected atom (predicates start with a lowercase letter)");
        }
        if (tok_.kind != Token::Ident) fail("expected atom");
        Atom a;
        a.predicate = tok_.value;
        if (a.predicate == "not") fail("'not' is a reserved word");
        std::size_t at_line = tok_.line, at_col = tok_.col;
        shift();
        if (tok_.kind == Token::LParen) {
            if (a.predicate == "top" || a.predicate == "bot")
                throw ParseError(at_line, at_col, "'" + a.predicate + "' is reserved and takes no arguments");
            shift();
            while (true) {
                if (tok_.kind == Token::Ident) {
                    a.args.push_back(Term{false, tok_.value});
                } else if (tok_.kind == Token::Var) {
                    a.args.push_back(Term{true, tok_.value});
                } else {
                    fail("expected term");
                }
                shift();
                if (tok_.kind == Token::Comma) {
                    shift();
                    continue;
                }
                break;
            }
            expect(Token::RParen, "')'");
        }
        if (!allow_truth_constants && a.is_truth_constant())
            throw ParseError(at_line, at_col, "'" + a.predicate + "' is reserved here");
        return a;
    }

    // lit := ["not"] ["K" ["not"]] atom
    void parse_body_literal(Rule& r) {
        bool outer_not = false;
        if (is_keyword("not")) {
            outer_not = true;
            shift();
        }
        if (is_keyword("K")) {
            shift();
            if (is_keyword("K")) fail("nesting of subjective literals is not allowed");
            bool inner_not = false;
            if (is_keyword("not")) {
                inner_not = true;
                shift();
                if (is_keyword("K")) fail("nesting of subjective literals is not allowed");
            }
            Atom a = parse_atom_body(false);
            SubjectiveLiteral l;
            l.inner = ObjectiveLiteral{a, inner_not ? Neg::neg : Neg::pos};
            l.negated = outer_not;
            r.body_subj.insert(l);
            return;
        }
        Atom a = parse_atom_body(true);
        r.body_obj.insert(ObjectiveLiteral{a, outer_not ? Neg::neg : Neg::pos});
    }

    Rule parse_rule() {
        Rule r;
        bool saw_head = false;
        if (tok_.kind != Token::If) {
            // head := "bot" | falsum | atom { "|" atom }
            if (tok_.kind == Token::Falsum || is_keyword("bot")) {
                shift();
                saw_head = true; // empty head
            } else {
                while (true) {
                    if (is_keyword("K")) fail("K is not allowed in rule heads");
                    if (is_keyword("not")) fail("default negation is not allowed in rule heads");
                    std::size_t at_line = tok_.line, at_col = tok_.col;
                    Atom a = parse_atom_body(true);
                    if (a.is_truth_constant())
                        throw ParseError(at_line, at_col,
                                         "'" + a.predicate + "' is only allowed as the entire head");
                    r.head.insert(a);
                    saw_head = true;
                    if (tok_.kind == Token::Pipe) {
                        shift();
                        continue;
                    }
                    break;
                }
            }
        }
        if (tok_.kind == Token::If) {
            shift();
            while (true) {
                parse_body_literal(r);
                if (tok_.kind == Token::Comma) {
                    shift();
                    continue;
                }
                break;
            }
        } else if (!saw_head) {
            fail("expected rule");
        }
        expect(Token::Dot, "'.'");
        if (!saw_head && r.body_obj.empty() && r.body_subj.empty()) fail("empty rule");
        return r;
    }
};

} // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

Atom parse_atom(std::string_view text) {
    Program p = parse_program(std::string(text) + ".");
    if (p.rules.size() != 1 || p.rules[0].head.size() != 1 || !p.rules[0].is_fact())
        throw ParseError(1, 1, "expected a single atom");
    return *p.rules[0].head.begin();
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

namespace {

std::set<std::string> rule_variables(const Rule& r) {
    std::set<std::string> vars;
    auto collect = [&vars](const Atom& a) {
        for (const auto& t : a.args)
            if (t.is_variable) vars.insert(t.name);
    };
    for (const auto& a : r.head) collect(a);
    for (const auto& l : r.body_obj) collect(l.atom);
    for (const auto& l : r.body_subj) collect(l.inner.atom);
    return vars;
}

Atom substitute(const Atom& a, const std::map<std::string, std::string>& binding) {
    Atom out = a;
    for (auto& t : out.args) {
        if (t.is_variable) {
            t.name = binding.at(t.name);
            t.is_variable = false;
        }
    }
    return out;
}

Rule substitute(const Rule& r, const std::map<std::string, std::string>& binding) {
    Rule out;
    for (const auto& a : r.head) out.head.insert(substitute(a, binding));
    for (const auto& l : r.body_obj) out.body_obj.insert({substitute(l.atom, binding), l.neg});
    for (const auto& l : r.body_subj)
        out.body_subj.insert({{substitute(l.inner.atom, binding), l.inner.neg}, l.negated});
    return out;
}

} // namespace

Program ground(const Program& p) {
    std::set<std::string> constants;
    for (const auto& r : p.rules) {
        auto collect = [&constants](const Atom& a) {
            for (const auto& t : a.args)
                if (!t.is_variable) constants.insert(t.name);
        };
        for (const auto& a : r.head) collect(a);
        for (const auto& l : r.body_obj) collect(l.atom);
        for (const auto& l : r.body_subj) collect(l.inner.atom);
    }

    Program out;
    std::set<Rule> seen;
    auto emit = [&](const Rule& r) {
        if (seen.insert(r).second) out.rules.push_back(r);
    };

    for (const auto& r : p.rules) {
        std::set<std::string> vars = rule_variables(r);
        if (vars.empty()) {
            emit(r);
            continue;
        }
        if (constants.empty())
            throw PreconditionError("cannot ground: variables occur but the program has no constants");
        // total substitution over all constant tuples, lexicographic order
        std::vector<std::string> var_list(vars.begin(), vars.end());
        std::vector<std::string> const_list(constants.begin(), constants.end());
        std::vector<std::size_t> index(var_list.size(), 0);
        bool done = false;
        while (!done) {
            std::map<std::string, std::string> binding;
            for (std::size_t i = 0; i < var_list.size(); ++i)
                binding[var_list[i]] = const_list[index[i]];
            emit(substitute(r, binding));
            done = true;
            for (std::size_t i = var_list.size(); i > 0;) {
                --i;
                if (++index[i] < const_list.size()) {
                    done = false;
                    break;
                }
                index[i] = 0;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

std::vector<Diagnostic> validate_elp(const Program& p) {
    // atom -> atoms it depends on through rule bodies (positive or negative)
    std::map<Atom, std::set<Atom>> deps;
    std::set<Atom> subjectively_defined;
    for (const auto& r : p.rules) {
        for (const auto& h : r.head) {
            if (h.is_truth_constant()) continue;
            if (!r.body_subj.empty()) subjectively_defined.insert(h);
            for (const auto& l : r.body_obj)
                if (!l.atom.is_truth_constant()) deps[h].insert(l.atom);
        }
    }

    auto reaches_subjective = [&](const Atom& start) {
        std::set<Atom> visited;
        std::vector<Atom> stack{start};
        while (!stack.empty()) {
            Atom a = stack.back();
            stack.pop_back();
            if (!visited.insert(a).second) continue;
            if (subjectively_defined.count(a)) return true;
            auto it = deps.find(a);
            if (it != deps.end())
                for (const auto& b : it->second) stack.push_back(b);
        }
        return false;
    };

    std::vector<Diagnostic> out;
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Rule& r = p.rules[i];
        if (!r.is_constraint()) continue;
        for (const auto& l : r.body_obj) {
            if (l.atom.is_truth_constant()) continue;
            if (reaches_subjective(l.atom)) {
                out.push_back({i, l.atom,
                               "constraint '" + r.to_string() +
                                   "' depends indirectly on a subjective literal through atom '" +
                                   l.atom.to_string() + "'"});
            }
        }
    }
    return out;
}

Program simplify_constants(const Program& p) {
    Program out;
    for (const auto& r : p.rules) {
        bool dead = false;
        Rule s;
        s.head = r.head;
        s.body_subj = r.body_subj;
        for (const auto& l : r.body_obj) {
            if (!l.atom.is_truth_constant()) {
                s.body_obj.insert(l);
                continue;
            }
            bool value = l.atom.is_top();
            if (l.neg == Neg::neg) value = !value;
            if (!value) {
                dead = true;
                break;
            }
        }
        if (!dead) out.rules.push_back(s);
    }
    return out;
}

} // namespace elp
