#include "qsqc/stabilizer.hpp"

#include <limits>

namespace qsqc {

MinWeight min_quantum_weight_excluding(const Gf2Subspace& space, const Gf2Subspace& excluded,
                                       int weight_cap) {
    MinWeight out;
    if (space.dim() <= kEnumerationDimLimit) {
        int best = std::numeric_limits<int>::max();
        space.for_each_element([&](const SympVector& v) {
            if (v.is_zero() || excluded.contains(v)) return;
            best = std::min(best, quantum_weight(v));
        });
        if (best != std::numeric_limits<int>::max()) out.weight = best;
        return out;
    }
    // Weight-limited scan from below; a hit at radius w after excluding all
    // radii < w is still exact.
    for (int w = 1; w <= std::min(weight_cap, space.n()); ++w) {
        bool found = false;
        enumerate_errors(space.n(), w, [&](const SympVector& v) {
            if (found || quantum_weight(v) != w) return;
            if (space.contains(v) && !excluded.contains(v)) found = true;
        });
        if (found) {
            out.weight = w;
            return out;
        }
        out.searched_up_to = w;
    }
    out.exact = false;
    return out;
}

MinWeight min_quantum_weight(const Gf2Subspace& s, int weight_cap) {
    return min_quantum_weight_excluding(s, Gf2Subspace::zero(s.n()), weight_cap);
}

StabilizerCode StabilizerCode::analyze(std::span<const SympVector> rows) {
    if (rows.empty()) throw Error("analyze needs at least one row (or an explicit n)");
    return analyze(rows.front().n(), rows);
}

StabilizerCode StabilizerCode::analyze(int n, std::span<const SympVector> rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (symplectic_inner(rows[i], rows[j]) != 0)
                throw NotSelfOrthogonalError(static_cast<int>(i), static_cast<int>(j));
    Gf2Subspace code = Gf2Subspace::span(n, rows);
    Gf2Subspace dual = code.symplectic_dual();
    MinWeight dm = min_quantum_weight_excluding(dual, code);
    return StabilizerCode(std::move(code), std::move(dual), dm);
}

DegeneracyProfile degeneracy_profile(const StabilizerCode& code, int d) {
    if (d < 1) throw Error("target distance must be positive");
    DegeneracyProfile out;
    out.d = d;
    if (code.code().dim() > kEnumerationDimLimit)
        throw Error("degeneracy profile needs dim C <= " + std::to_string(kEnumerationDimLimit));
    code.code().for_each_element([&](const SympVector& v) {
        if (v.is_zero()) return;
        const int w = quantum_weight(v);
        if (w <= d - 1) out.lowweight.push_back(v);
    });
    out.span = Gf2Subspace::span(code.n(), out.lowweight);
    out.s = out.span.dim();
    out.span_dual = out.span.symplectic_dual();
    out.d_s = min_quantum_weight_excluding(out.span_dual, out.span);
    return out;
}

}  // namespace qsqc
