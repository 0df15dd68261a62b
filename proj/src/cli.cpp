#include "elp/cli.hpp"

#include "elp/errors.hpp"
#include "elp/report.hpp"
#include "elp/semantics.hpp"
#include "elp/splitting.hpp"
#include "elp/stratify.hpp"
#include "elp/topdown.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace elp::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : Error {
    using Error::Error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Splits "--u p,q,eligible(mike)" respecting parentheses.
std::set<Atom> parse_atom_list(const std::string& text) {
    std::set<Atom> out;
    std::string current;
    int depth = 0;
    auto flush = [&] {
        if (!current.empty()) {
            out.insert(parse_atom(current));
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) current += c;
    }
    flush();
    return out;
}

SemanticsId parse_semantics(const std::string& name) {
    auto s = semantics_from_string(name);
    if (!s) throw UsageError("unknown semantics '" + name + "'");
    return *s;
}

void check_atom_cap(const Program& p, int max_atoms) {
    std::size_t n = p.atom_universe().size();
    if (n > static_cast<std::size_t>(max_atoms))
        throw CapExceededError("program has " + std::to_string(n) +
                               " atoms, exceeding the cap of " + std::to_string(max_atoms));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_world_views(std::ostream& out, const std::set<WorldView>& c) {
    if (c.empty()) {
        out << "0 world views\n";
        return;
    }
    for (const auto& w : c) out << to_string(w) << "\n";
}

Json program_rules_json(const Program& p) {
    Json rules = Json::array();
    for (const auto& r : p.rules) rules.push_back(r.to_string());
    return rules;
}

// -------------------------------------------------------------------------
// Corpus runner
// -------------------------------------------------------------------------

struct CorpusOutcome {
    std::string entry;
    std::string check;
    bool ok;
    std::string expected;
    std::string got;
};

Json sorted_rule_strings(const Program& p) {
    std::vector<std::string> rules;
    for (const auto& r : p.rules) rules.push_back(r.to_string());
    std::sort(rules.begin(), rules.end());
    Json out = Json::array();
    for (auto& r : rules) out.push_back(r);
    return out;
}

std::vector<CorpusOutcome> run_corpus_entry(const fs::path& file, WorldViewOptions opt) {
    Json entry = Json::parse(slurp(file.string()));
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("checks"))
        throw UsageError("malformed corpus file: " + file.string());
    std::string name = entry["name"];

    std::string text;
    if (entry.contains("program"))
        text = entry["program"].get<std::string>();
    else if (entry.contains("program_file"))
        text = slurp((file.parent_path() / entry["program_file"].get<std::string>()).string());
    else
        throw UsageError("malformed corpus file (no program): " + file.string());
    Program p = ground(parse_program(text));

    std::set<Atom> entry_u;
    if (entry.contains("u"))
        for (const auto& a : entry["u"]) entry_u.insert(parse_atom(a.get<std::string>()));

    std::vector<CorpusOutcome> outcomes;
    for (const auto& check : entry["checks"]) {
        std::string op = check.at("op");
        SemanticsId s = parse_semantics(check.value("semantics", "g91"));
        SubsetPolicy policy = check.value("subsets", "maximal") == std::string("all")
                                  ? SubsetPolicy::all
                                  : SubsetPolicy::maximal;
        std::set<Atom> u = entry_u;
        if (check.contains("u")) {
            u.clear();
            for (const auto& a : check["u"]) u.insert(parse_atom(a.get<std::string>()));
        }

        std::string label = op;
        if (check.contains("semantics")) label += " " + check["semantics"].get<std::string>();

        Json got;
        if (op == "solve")
            got = to_json(answer_sets(p)); // a set of interpretations
        else if (op == "ground")
            got = sorted_rule_strings(ground(p));
        else if (op == "worldviews")
            got = to_json(world_views(p, s, opt));
        else if (op == "esp")
            got = to_json(esp_world_views(p, u, s, opt));
        else if (op == "tdespb")
            got = to_json(tdespb_candidates(p, u, s, opt));
        else if (op == "tdesp")
            got = to_json(tdesp_candidates(p, u, s, policy, opt));
        else if (op == "stratify")
            got = stratify(p).stratified;
        else
            throw UsageError("malformed corpus file (unknown op '" + op + "'): " + file.string());

        Json expected = check.at("expect");
        outcomes.push_back({name, label, got == expected, expected.dump(), got.dump()});
    }
    return outcomes;
}

int cmd_corpus(const std::string& dir, bool json, WorldViewOptions opt, std::ostream& out) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::vector<CorpusOutcome> outcomes;
    for (const auto& f : files) {
        auto batch = run_corpus_entry(f, opt);
        outcomes.insert(outcomes.end(), batch.begin(), batch.end());
    }

    std::size_t failed = 0;
    Json jchecks = Json::array();
    for (const auto& o : outcomes) {
        if (!o.ok) ++failed;
        if (json) {
            jchecks.push_back({{"entry", o.entry}, {"check", o.check}, {"ok", o.ok}});
        } else {
            out << (o.ok ? "PASS " : "FAIL ") << o.entry << " " << o.check << "\n";
            if (!o.ok) out << "  expected " << o.expected << "\n  got      " << o.got << "\n";
        }
    }
    if (json) {
        print_json(out, Json{{"checks", jchecks},
                             {"passed", outcomes.size() - failed},
                             {"failed", failed}});
    } else {
        out << "passed " << (outcomes.size() - failed) << ", failed " << failed << "\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"epistemic logic program splitting toolkit"};
    app.require_subcommand(1);

    std::string file, u_text, semantics = "g91", subsets = "maximal";
    int max_atoms = 16, max_subjective = 10;
    bool json = false;

    auto add_common = [&](CLI::App* c, bool with_u, bool with_semantics) {
        c->add_option("file", file, "program file (.elp)")->required();
        c->add_flag("--json", json, "machine-readable output");
        c->add_option("--max-atoms", max_atoms, "atom universe cap");
        c->add_option("--max-subjective", max_subjective, "distinct subjective literal cap");
        if (with_u) c->add_option("--u", u_text, "splitting set, comma separated")->required();
        if (with_semantics)
            c->add_option("--semantics", semantics, "g91 | k15 | k15-classic | s16");
    };

    CLI::App* ground_cmd = app.add_subcommand("ground", "ground a program");
    add_common(ground_cmd, false, false);
    CLI::App* solve = app.add_subcommand("solve", "answer sets of an objective program");
    add_common(solve, false, false);
    CLI::App* wv = app.add_subcommand("worldviews", "world views of a program");
    add_common(wv, false, true);
    CLI::App* split_cmd = app.add_subcommand("split", "bottom/top partition along a splitting set");
    add_common(split_cmd, true, false);
    CLI::App* esp = app.add_subcommand("esp", "bottom-up composition of world views");
    add_common(esp, true, true);
    CLI::App* tdespb = app.add_subcommand("tdespb", "top-down candidates, basic version");
    add_common(tdespb, true, true);
    CLI::App* tdesp = app.add_subcommand("tdesp", "top-down candidates, extended version");
    add_common(tdesp, true, true);
    tdesp->add_option("--subsets", subsets, "maximal | all");
    CLI::App* compare = app.add_subcommand("compare", "run all routes and compare");
    add_common(compare, true, true);
    compare->add_option("--subsets", subsets, "maximal | all");
    CLI::App* stratify_cmd = app.add_subcommand("stratify", "epistemic stratification check");
    add_common(stratify_cmd, false, false);
    CLI::App* corpus = app.add_subcommand("corpus", "run expected-output checks on a corpus dir");
    corpus->add_option("dir", file, "directory of corpus entries")->required();
    corpus->add_flag("--json", json, "machine-readable output");
    corpus->add_option("--max-subjective", max_subjective, "distinct subjective literal cap");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        WorldViewOptions opt{max_subjective};
        if (corpus->parsed()) return cmd_corpus(file, json, opt, out);

        // every subcommand works on the grounded program
        Program p = ground(parse_program(slurp(file)));

        if (ground_cmd->parsed()) {
            if (json)
                print_json(out, Json{{"program", file}, {"rules", program_rules_json(p)}});
            else
                out << p.to_string();
            return 0;
        }

        check_atom_cap(p, max_atoms);
        SemanticsId s = parse_semantics(semantics);
        if (subsets != "maximal" && subsets != "all")
            throw UsageError("unknown subset policy '" + subsets + "'");
        SubsetPolicy policy = subsets == "all" ? SubsetPolicy::all : SubsetPolicy::maximal;

        if (solve->parsed()) {
            auto as = answer_sets(p);
            if (json) {
                print_json(out, Json{{"program", file}, {"answer_sets", to_json(as)}});
            } else if (as.empty()) {
                out << "0 answer sets\n";
            } else {
                for (const auto& i : as) out << to_string(i) << "\n";
            }
            return 0;
        }
        if (wv->parsed()) {
            auto c = world_views(p, s, opt);
            if (json)
                print_json(out, Json{{"program", file},
                                     {"semantics", to_string(s)},
                                     {"world_views", to_json(c)}});
            else
                print_world_views(out, c);
            return 0;
        }

        std::set<Atom> u = parse_atom_list(u_text);
        if (split_cmd->parsed()) {
            Splitting sp = split(u, p);
            if (json) {
                Json ju = Json::array();
                for (const auto& a : u) ju.push_back(a.to_string());
                print_json(out, Json{{"program", file},
                                     {"u", ju},
                                     {"bottom", program_rules_json(sp.bottom)},
                                     {"top", program_rules_json(sp.top)}});
            } else {
                out << "u: " << to_string(u) << "\n";
                out << "bottom:\n" << sp.bottom.to_string();
                out << "top:\n" << sp.top.to_string();
            }
            return 0;
        }
        if (esp->parsed() || tdespb->parsed() || tdesp->parsed()) {
            std::set<WorldView> c;
            if (esp->parsed())
                c = esp_world_views(p, u, s, opt);
            else if (tdespb->parsed())
                c = tdespb_candidates(p, u, s, opt);
            else
                c = tdesp_candidates(p, u, s, policy, opt);
            if (json) {
                Json ju = Json::array();
                for (const auto& a : u) ju.push_back(a.to_string());
                Json j{{"program", file},
                       {"semantics", to_string(s)},
                       {"u", ju},
                       {"world_views", to_json(c)}};
                if (tdesp->parsed()) j["subsets"] = subsets;
                print_json(out, j);
            } else {
                print_world_views(out, c);
            }
            return 0;
        }
        if (compare->parsed()) {
            EquivalenceReport rep = check_equivalence(p, u, s, policy, opt, file);
            if (json) {
                print_json(out, report_to_json(rep));
            } else {
                auto section = [&](const char* name, const std::set<WorldView>& c) {
                    out << name << ":\n";
                    if (c.empty()) out << "  (none)\n";
                    for (const auto& w : c) out << "  " << to_string(w) << "\n";
                };
                section("direct", rep.direct);
                section("esp", rep.esp);
                section("tdespb", rep.tdespb);
                section("tdesp", rep.tdesp);
                out << "verdicts:\n";
                out << "  esp_eq_direct: " << (rep.esp_eq_direct() ? "yes" : "no") << "\n";
                out << "  tdespb_eq_direct: " << (rep.tdespb_eq_direct() ? "yes" : "no") << "\n";
                out << "  tdesp_eq_direct: " << (rep.tdesp_eq_direct() ? "yes" : "no") << "\n";
                out << "  tdespb_eq_esp: " << (rep.tdespb_eq_esp() ? "yes" : "no") << "\n";
                out << "traces:\n";
                for (const auto& t : rep.traces)
                    out << "  top: " << to_string(t.top_wv) << " es: " << to_string(t.req.es)
                        << " ec: " << to_string(t.req.ec) << " rq: " << to_string(t.req.rq)
                        << "\n";
            }
            return 0;
        }
        if (stratify_cmd->parsed()) {
            StratificationResult r = stratify(p);
            if (json) {
                Json j{{"program", file}, {"stratified", r.stratified}};
                if (r.stratified) {
                    Json lam = Json::object();
                    for (const auto& [a, lv] : r.lambda) lam[a.to_string()] = lv;
                    j["lambda"] = lam;
                } else {
                    Json v = Json::array();
                    for (const auto& a : r.violation) v.push_back(a.to_string());
                    j["violation"] = v;
                }
                print_json(out, j);
            } else {
                out << "stratified: " << (r.stratified ? "yes" : "no") << "\n";
                if (r.stratified) {
                    for (const auto& [a, lv] : r.lambda) out << a.to_string() << ": " << lv << "\n";
                } else {
                    out << "violation:";
                    for (const auto& a : r.violation) out << " " << a.to_string();
                    out << "\n";
                }
            }
            return 0;
        }
        throw UsageError("no subcommand");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidSplittingError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace elp::cli
