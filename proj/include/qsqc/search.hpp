#pragma once

#include <cstdint>
#include <optional>

#include "qsqc/core.hpp"

namespace qsqc {

enum class SearchStrategy { exhaustive, greedy };

struct SearchProblem {
    int d = 1;
    std::optional<int> L_target;  // nullopt: maximize L
    SearchStrategy strategy = SearchStrategy::exhaustive;
    std::uint64_t seed = 0;             // greedy tie-shuffling; 0 keeps canonical order
    std::uint64_t node_budget = 50'000'000;
    int max_candidate_dim = 20;  // refuse when n - k - s exceeds this
};

enum class SearchStatus { found, not_found, target_exceeds_dm, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<QscCode> code;  // engaged on found; best-so-far on budget_exhausted
    std::uint64_t nodes = 0;
};

/// All cosets of C_perp whose representative lies in C(d-1)_perp, ordered by
/// (minimum norm, lexicographic representative); 2^(n-k-s) of them, the zero
/// coset first. These form a subgroup of the quotient, so pairwise distances
/// reduce to the norm table of the candidates themselves.
std::vector<Coset> candidate_cosets(const StabilizerCode& code, int d,
                                    int max_candidate_dim = 20);

/// Find Omega with pairwise distance >= d inside C(d-1)_perp, pinned to
/// contain the zero coset. Exhaustive strategy is a branch-and-bound clique
/// search: not_found proves nonexistence within the candidate set.
SearchResult find_qsc(const StabilizerCode& code, const SearchProblem& problem);

/// Add one more candidate coset at distance >= d from every member, scanning
/// the full candidate list; not_found means the code is saturated.
SearchResult extend(const StabilizerCode& code, const QscCode& qsc, int d);

}  // namespace qsqc
