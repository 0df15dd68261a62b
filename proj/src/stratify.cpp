#include "elp/stratify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace elp {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

StratificationResult stratify(const Program& p) {
    std::vector<Atom> atoms;
    std::map<Atom, std::size_t> index;
    for (const auto& a : p.atom_universe()) {
        index[a] = atoms.size();
        atoms.push_back(a);
    }
    const std::size_t n = atoms.size();

    // equality: all atoms of a rule outside its subjective body share a level
    UnionFind uf(n);
    for (const auto& r : p.rules) {
        std::set<Atom> subj = r.subjective_body_atoms();
        std::vector<std::size_t> eq;
        for (const auto& a : r.atoms())
            if (!subj.count(a)) eq.push_back(index.at(a));
        for (std::size_t i = 1; i < eq.size(); ++i) uf.merge(eq[0], eq[i]);
    }

    // strict edges between classes: b -> a means level(a) > level(b)
    std::vector<std::set<std::size_t>> succ(n), pred(n);
    for (const auto& r : p.rules) {
        for (const auto& a : r.head_and_objective_body_atoms())
            for (const auto& b : r.subjective_body_atoms()) {
                std::size_t ca = uf.find(index.at(a)), cb = uf.find(index.at(b));
                succ[cb].insert(ca);
                pred[ca].insert(cb);
            }
    }

    // cycle detection over the class digraph
    std::vector<int> color(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<std::size_t> stack, cycle;
    auto dfs = [&](auto&& self, std::size_t c) -> bool {
        color[c] = 1;
        stack.push_back(c);
        for (std::size_t next : succ[c]) {
            if (color[next] == 1) {
                cycle.assign(std::find(stack.begin(), stack.end(), next), stack.end());
                return false;
            }
            if (color[next] == 0 && !self(self, next)) return false;
        }
        color[c] = 2;
        stack.pop_back();
        return true;
    };
    bool has_cycle = false;
    for (std::size_t i = 0; i < n && !has_cycle; ++i) {
        std::size_t c = uf.find(i);
        if (color[c] == 0 && !dfs(dfs, c)) has_cycle = true;
    }

    StratificationResult out;
    if (has_cycle) {
        out.stratified = false;
        // smallest atom of each class along the cycle, rotated to start at
        // the lexicographically least one
        std::vector<Atom> witness;
        for (std::size_t c : cycle) {
            Atom best;
            bool first = true;
            for (std::size_t i = 0; i < n; ++i)
                if (uf.find(i) == c && (first || atoms[i] < best)) {
                    best = atoms[i];
                    first = false;
                }
            witness.push_back(best);
        }
        std::rotate(witness.begin(), std::min_element(witness.begin(), witness.end()),
                    witness.end());
        out.violation = std::move(witness);
        return out;
    }

    // canonical minimal levels: longest strict chain below each class
    std::vector<int> level(n, -1);
    auto compute = [&](auto&& self, std::size_t c) -> int {
        if (level[c] >= 0) return level[c];
        int lv = 0;
        for (std::size_t b : pred[c]) lv = std::max(lv, self(self, b) + 1);
        return level[c] = lv;
    };
    out.stratified = true;
    for (std::size_t i = 0; i < n; ++i) out.lambda[atoms[i]] = compute(compute, uf.find(i));
    return out;
}

} // namespace elp
