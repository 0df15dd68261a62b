#include "elp/stratify.hpp"

#include "elp/solve.hpp"
#include "support/generators.hpp"
#include "support/programs.hpp"

#include <doctest.h>

#include <map>
#include <vector>

using namespace elp;

namespace {

/// Re-checks the two defining conditions of a level mapping against every rule.
bool valid_mapping(const Program& p, const std::map<Atom, int>& lambda) {
    for (const auto& r : p.rules) {
        std::set<Atom> subj = r.subjective_body_atoms();
        std::vector<Atom> eq;
        for (const auto& a : r.atoms())
            if (!subj.count(a)) eq.push_back(a);
        for (std::size_t i = 1; i < eq.size(); ++i)
            if (lambda.at(eq[i]) != lambda.at(eq[0])) return false;
        for (const auto& a : r.head_and_objective_body_atoms())
            for (const auto& b : subj)
                if (lambda.at(a) <= lambda.at(b)) return false;
    }
    return true;
}

/// Exhaustive search for any level assignment with at most |At| levels.
bool brute_force_stratified(const Program& p) {
    std::set<Atom> universe = p.atom_universe();
    std::vector<Atom> atoms(universe.begin(), universe.end());
    const std::size_t n = atoms.size();
    if (n == 0) return true;
    std::vector<int> levels(n, 0);
    while (true) {
        std::map<Atom, int> lambda;
        for (std::size_t i = 0; i < n; ++i) lambda[atoms[i]] = levels[i];
        if (valid_mapping(p, lambda)) return true;
        std::size_t i = 0;
        while (i < n && ++levels[i] == static_cast<int>(n)) levels[i++] = 0;
        if (i == n) return false;
    }
}

} // namespace

TEST_CASE("stratify: eligibility program") {
    StratificationResult r = stratify(parse_program(progs::kPi3));
    REQUIRE(r.stratified);
    for (const char* a : {"e", "ne", "f", "h", "m"}) CHECK(r.lambda.at(atom(a)) == 0);
    CHECK(r.lambda.at(atom("in")) == 1);
    CHECK(r.lambda.at(atom("a")) == 2);
}

TEST_CASE("stratify: epistemic cycle is infeasible") {
    StratificationResult r = stratify(parse_program("e :- not K f. f :- not K e."));
    REQUIRE_FALSE(r.stratified);
    CHECK(std::set<Atom>(r.violation.begin(), r.violation.end()) ==
          std::set<Atom>{atom("e"), atom("f")});
}

TEST_CASE("stratify: objective programs sit on one level") {
    StratificationResult r = stratify(parse_program(progs::kLayeredAsp));
    REQUIRE(r.stratified);
    for (const auto& [a, lv] : r.lambda) CHECK(lv == 0);
}

TEST_CASE("stratify: atom both objective and subjective in one rule") {
    CHECK_FALSE(stratify(parse_program("a :- b, K b.")).stratified);
    CHECK_FALSE(stratify(parse_program("a :- K a.")).stratified);
}

TEST_CASE("stratify: subjective constraints impose nothing") {
    CHECK(stratify(parse_program("p | q. :- not K p.")).stratified);
}

TEST_CASE("stratify: two-level decision program") {
    Program p = parse_program(
        "verdict :- proven.\n"
        "verdict :- presumed.\n"
        ":- not K verdict.\n"
        "proven :- K evidence.\n"
        "presumed :- K not evidence.\n");
    StratificationResult r = stratify(p);
    REQUIRE(r.stratified);
    CHECK(r.lambda.at(atom("evidence")) == 0);
    CHECK(r.lambda.at(atom("proven")) == 1);
    CHECK(r.lambda.at(atom("presumed")) == 1);
    CHECK(r.lambda.at(atom("verdict")) == 1);
}

TEST_CASE("stratify: returned mapping always satisfies the definition") {
    gen::Rng rng(99887);
    gen::Config cfg;
    for (int trial = 0; trial < 60; ++trial) {
        cfg.num_atoms = gen::pick(rng, 2, 7);
        Program p = trial % 2 == 0 ? gen::random_program(rng, cfg)
                                   : gen::random_stratified_program(rng, cfg);
        StratificationResult r = stratify(p);
        CAPTURE(p.to_string());
        if (r.stratified) CHECK(valid_mapping(p, r.lambda));
    }
}

TEST_CASE("stratify: agrees with brute force at desk scale") {
    gen::Rng rng(7654);
    gen::Config cfg;
    int stratified_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        cfg.num_atoms = gen::pick(rng, 2, 5);
        Program p = trial % 2 == 0 ? gen::random_program(rng, cfg)
                                   : gen::random_stratified_program(rng, cfg);
        CAPTURE(p.to_string());
        bool expect = brute_force_stratified(p);
        CHECK(stratify(p).stratified == expect);
        if (expect) ++stratified_seen;
    }
    CHECK(stratified_seen > 10);

    // a couple of larger instances
    for (const char* text : {progs::kPi3, progs::kLayeredElp}) {
        Program p = parse_program(text);
        CHECK(stratify(p).stratified == brute_force_stratified(p));
    }
}

TEST_CASE("stratify: generated stratified programs are recognized") {
    gen::Rng rng(1111);
    gen::Config cfg;
    for (int trial = 0; trial < 40; ++trial) {
        cfg.num_atoms = gen::pick(rng, 3, 7);
        Program p = gen::random_stratified_program(rng, cfg);
        CAPTURE(p.to_string());
        CHECK(stratify(p).stratified);
    }
}
