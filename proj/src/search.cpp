#include "qsqc/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace qsqc {

namespace {

// Dense undirected graph over word-packed rows.
class BitGraph {
public:
    explicit BitGraph(int m) : m_(m), words_((static_cast<std::size_t>(m) + 63) / 64),
                               bits_(words_ * static_cast<std::size_t>(m), 0) {}

    void add_edge(int i, int j) {
        set(i, j);
        set(j, i);
    }
    bool edge(int i, int j) const {
        return (row(i)[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
    }
    const std::uint64_t* row(int i) const { return bits_.data() + words_ * static_cast<std::size_t>(i); }

private:
    void set(int i, int j) {
        bits_[words_ * static_cast<std::size_t>(i) + (static_cast<std::size_t>(j) >> 6)] |=
            std::uint64_t{1} << (j & 63);
    }
    int m_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Branch-and-bound maximum clique with a greedy-colouring bound. Complete:
// an empty result set within budget proves no larger clique exists.
struct CliqueSearch {
    const BitGraph& g;
    std::uint64_t budget;
    std::optional<int> target;  // stop as soon as a clique of this size is known

    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> best;
    std::vector<int> cur;

    bool satisfied() const { return target && static_cast<int>(best.size()) >= *target; }

    void run(std::vector<int> p) { expand(p); }

    void expand(std::vector<int>& p) {
        if (satisfied() || out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (p.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // Greedy colouring in list order; colour count bounds the clique size
        // reachable from here.
        std::vector<int> colour(p.size(), 0);
        std::vector<std::vector<int>> classes;
        for (std::size_t vi = 0; vi < p.size(); ++vi) {
            const int v = p[vi];
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.edge(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            colour[vi] = static_cast<int>(c) + 1;
        }
        std::vector<std::size_t> order(p.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });

        for (std::size_t oi = order.size(); oi-- > 0;) {
            if (satisfied() || out_of_budget) return;
            const std::size_t vi = order[oi];
            const int bound = static_cast<int>(cur.size()) + colour[vi];
            if (bound <= static_cast<int>(best.size())) return;  // colours only shrink leftwards
            const int v = p[vi];
            std::vector<int> next;
            next.reserve(p.size());
            for (std::size_t oj = 0; oj < oi; ++oj) {
                const int u = p[order[oj]];
                if (g.edge(u, v)) next.push_back(u);
            }
            cur.push_back(v);
            expand(next);
            cur.pop_back();
        }
    }
};

struct CandidateTable {
    std::vector<Coset> cosets;  // sorted by (norm, lex rep)
    std::vector<int> norms;
    std::unordered_map<SympVector, int, SympVectorHash> norm_of_rep;
};

CandidateTable build_candidates(const StabilizerCode& code, int d, int max_dim) {
    const DegeneracyProfile profile = degeneracy_profile(code, d);
    const int free_dim = code.n() - code.k() - profile.s;
    if (free_dim > max_dim)
        throw TooLargeError("candidate coset space has dimension " + std::to_string(free_dim) +
                            " (limit " + std::to_string(max_dim) + ")");

    // A complement of C_perp inside C(d-1)_perp spans one representative per
    // candidate coset.
    std::vector<SympVector> complement;
    Gf2Subspace accum = code.dual();
    for (const auto& row : profile.span_dual.basis()) {
        if (accum.contains(row)) continue;
        complement.push_back(row);
        std::vector<SympVector> rows = accum.basis();
        rows.push_back(row);
        accum = Gf2Subspace::span(code.n(), rows);
    }

    QuotientSpace space(code.dual());
    const Gf2Subspace complement_span = Gf2Subspace::span(code.n(), complement);

    CandidateTable table;
    table.cosets.reserve(std::size_t{1} << free_dim);
    complement_span.for_each_element([&](const SympVector& v) {
        table.cosets.push_back(space.canonicalize(v));
    });
    std::sort(table.cosets.begin(), table.cosets.end(),
              [](const Coset& a, const Coset& b) { return a.rep().lex_less(b.rep()); });

    table.norms.reserve(table.cosets.size());
    for (const auto& c : table.cosets) table.norms.push_back(quotient_min_norm(c));
    table.norm_of_rep.reserve(table.cosets.size());
    for (std::size_t i = 0; i < table.cosets.size(); ++i)
        table.norm_of_rep.emplace(table.cosets[i].rep(), table.norms[i]);

    std::vector<std::size_t> order(table.cosets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (table.norms[a] != table.norms[b]) return table.norms[a] < table.norms[b];
        return table.cosets[a].rep().lex_less(table.cosets[b].rep());
    });
    std::vector<Coset> sorted_cosets;
    std::vector<int> sorted_norms;
    sorted_cosets.reserve(order.size());
    sorted_norms.reserve(order.size());
    for (auto i : order) {
        sorted_cosets.push_back(table.cosets[i]);
        sorted_norms.push_back(table.norms[i]);
    }
    table.cosets = std::move(sorted_cosets);
    table.norms = std::move(sorted_norms);
    return table;
}

// Distance between two candidate cosets = norm of their difference, which is
// again a candidate (the candidates form a subgroup of the quotient).
int pair_distance(const CandidateTable& table, const Coset& a, const Coset& b) {
    const Coset diff = a + b;
    const auto it = table.norm_of_rep.find(diff.rep());
    return it != table.norm_of_rep.end() ? it->second : quotient_min_norm(diff);
}

SearchResult package(const StabilizerCode& code, std::vector<const Coset*> chosen,
                     SearchStatus status, std::uint64_t nodes) {
    SearchResult result;
    result.status = status;
    result.nodes = nodes;
    if (!chosen.empty()) {
        std::vector<SympVector> reps;
        reps.reserve(chosen.size());
        for (const Coset* c : chosen) reps.push_back(c->rep());
        result.code = build_qsc(code, reps);
    }
    return result;
}

}  // namespace

std::vector<Coset> candidate_cosets(const StabilizerCode& code, int d, int max_candidate_dim) {
    return build_candidates(code, d, max_candidate_dim).cosets;
}

SearchResult find_qsc(const StabilizerCode& code, const SearchProblem& problem) {
    const MinWeight& dm = code.dm();
    if (dm.weight && problem.d > *dm.weight) return {SearchStatus::target_exceeds_dm, {}, 0};
    if (!dm.exact && !dm.weight && dm.searched_up_to < problem.d - 1)
        throw Error("d_m is undetermined at this distance; raise the weight cap");

    const CandidateTable table = build_candidates(code, problem.d, problem.max_candidate_dim);
    const int L_want = problem.L_target.value_or(-1);
    if (L_want == 1 || table.cosets.size() == 1)
        return package(code, {&table.cosets.front()}, SearchStatus::found, 0);

    // The zero coset is pinned; only candidates at distance >= d from it
    // (norm >= d) can join, and distances reduce to difference norms.
    std::vector<int> live;
    for (std::size_t i = 0; i < table.cosets.size(); ++i)
        if (table.norms[i] >= problem.d) live.push_back(static_cast<int>(i));

    if (problem.strategy == SearchStrategy::greedy) {
        std::vector<int> order = live;
        if (problem.seed != 0) {
            std::mt19937_64 rng(problem.seed);
            std::shuffle(order.begin(), order.end(), rng);
        }
        std::vector<const Coset*> chosen = {&table.cosets.front()};
        for (int v : order) {
            if (L_want > 0 && static_cast<int>(chosen.size()) >= L_want) break;
            const Coset& cand = table.cosets[static_cast<std::size_t>(v)];
            bool ok = true;
            for (std::size_t m = 1; m < chosen.size() && ok; ++m)
                ok = pair_distance(table, *chosen[m], cand) >= problem.d;
            if (ok) chosen.push_back(&cand);
        }
        if (L_want > 0 && static_cast<int>(chosen.size()) < L_want)
            return {SearchStatus::not_found, {}, 0};
        return package(code, chosen, SearchStatus::found, 0);
    }

    BitGraph g(static_cast<int>(live.size()));
    for (std::size_t a = 0; a < live.size(); ++a)
        for (std::size_t b = a + 1; b < live.size(); ++b) {
            const int da = live[a], db = live[b];
            if (pair_distance(table, table.cosets[static_cast<std::size_t>(da)],
                              table.cosets[static_cast<std::size_t>(db)]) >= problem.d)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }

    CliqueSearch search{g, problem.node_budget,
                        L_want > 0 ? std::optional<int>(L_want - 1) : std::nullopt};
    std::vector<int> all(live.size());
    std::iota(all.begin(), all.end(), 0);
    search.run(all);

    std::vector<const Coset*> chosen = {&table.cosets.front()};
    for (int v : search.best)
        chosen.push_back(&table.cosets[static_cast<std::size_t>(live[static_cast<std::size_t>(v)])]);

    if (search.out_of_budget && (L_want <= 0 || static_cast<int>(chosen.size()) < L_want))
        return package(code, chosen, SearchStatus::budget_exhausted, search.nodes);
    if (L_want > 0 && static_cast<int>(chosen.size()) < L_want)
        return {SearchStatus::not_found, {}, search.nodes};
    return package(code, chosen, SearchStatus::found, search.nodes);
}

SearchResult extend(const StabilizerCode& code, const QscCode& qsc, int d) {
    const CandidateTable table = build_candidates(code, d, 20);
    for (std::size_t i = 0; i < table.cosets.size(); ++i) {
        const Coset& cand = table.cosets[i];
        if (qsc.contains_coset(cand)) continue;
        bool ok = true;
        for (const Coset& member : qsc.cosets) {
            if (pair_distance(table, member, cand) < d) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<SympVector> reps;
        reps.reserve(qsc.cosets.size() + 1);
        for (const Coset& member : qsc.cosets) reps.push_back(member.rep());
        reps.push_back(cand.rep());
        SearchResult result;
        result.status = SearchStatus::found;
        result.code = build_qsc(code, reps);
        return result;
    }
    return {SearchStatus::not_found, {}, 0};
}

}  // namespace qsqc
