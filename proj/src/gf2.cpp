#include "qsqc/gf2.hpp"

#include <algorithm>
#include <bit>

namespace qsqc {

bool SympVector::lex_less(const SympVector& rhs) const {
    require_same_n(rhs);
    for (int i = 0; i < 2 * n_; ++i) {
        const bool l = bit(i), r = rhs.bit(i);
        if (l != r) return r;  // 0 before 1 at the first differing coordinate
    }
    return false;
}

int SympVector::leading_bit() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
}

std::vector<std::uint64_t> SympVector::extract(int start, int len) const {
    std::vector<std::uint64_t> out((static_cast<std::size_t>(len) + 63) / 64, 0);
    for (int i = 0; i < len; ++i)
        if (bit(start + i)) out[i >> 6] |= std::uint64_t{1} << (i & 63);
    return out;
}

SympVector SympVector::swap_halves() const {
    SympVector out(n_);
    for (int i = 0; i < n_; ++i) {
        out.set_bit(i, b_bit(i));
        out.set_bit(n_ + i, a_bit(i));
    }
    return out;
}

std::string SympVector::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(2 * n_) + 1);
    for (int i = 0; i < n_; ++i) s.push_back(a_bit(i) ? '1' : '0');
    s.push_back('|');
    for (int i = 0; i < n_; ++i) s.push_back(b_bit(i) ? '1' : '0');
    return s;
}

int symplectic_inner(const SympVector& u, const SympVector& v) {
    u.require_same_n(v);
    const auto ua = u.a_words(), ub = u.b_words();
    const auto va = v.a_words(), vb = v.b_words();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < ua.size(); ++i)
        acc ^= std::popcount(ua[i] & vb[i]) ^ std::popcount(ub[i] & va[i]);
    return static_cast<int>(acc & 1);
}

Gf2Subspace Gf2Subspace::full(int n) {
    std::vector<SympVector> rows;
    rows.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        SympVector v(n);
        v.set_bit(i, true);
        rows.push_back(std::move(v));
    }
    return span(n, rows);
}

Gf2Subspace Gf2Subspace::span(std::span<const SympVector> vectors) {
    if (vectors.empty()) throw Error("span of an empty list needs an explicit n");
    return span(vectors.front().n(), vectors);
}

Gf2Subspace Gf2Subspace::span(int n, std::span<const SympVector> vectors) {
    Gf2Subspace out(n);
    std::vector<SympVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.n() != n) throw DimensionMismatchError("span rows of different length");
        rows.push_back(v);
    }
    // Forward elimination with leftmost pivots, then back-substitution.
    std::size_t r = 0;
    for (int col = 0; col < 2 * n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv].bit(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].bit(col)) rows[i] += rows[r];
        out.pivots_.push_back(col);
        ++r;
    }
    rows.resize(r);
    out.basis_ = std::move(rows);
    return out;
}

Gf2Subspace rref(std::span<const SympVector> vectors) { return Gf2Subspace::span(vectors); }

SympVector Gf2Subspace::reduce(SympVector v) const {
    require_same_n(v.n());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.bit(pivots_[i])) v += basis_[i];
    return v;
}

bool Gf2Subspace::contains_subspace(const Gf2Subspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

Gf2Subspace Gf2Subspace::symplectic_dual() const {
    // (w,s)_s = w . swap_halves(s): the kernel of the plain-orthogonality
    // matrix whose rows are the swapped basis rows.
    std::vector<SympVector> m;
    m.reserve(basis_.size());
    for (const auto& row : basis_) m.push_back(row.swap_halves());
    const Gf2Subspace reduced = span(n_, m);

    std::vector<char> is_pivot(static_cast<std::size_t>(2 * n_), 0);
    for (int p : reduced.pivots_) is_pivot[static_cast<std::size_t>(p)] = 1;

    std::vector<SympVector> kernel;
    kernel.reserve(static_cast<std::size_t>(2 * n_) - reduced.basis_.size());
    for (int free = 0; free < 2 * n_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        SympVector v(n_);
        v.set_bit(free, true);
        for (std::size_t i = 0; i < reduced.basis_.size(); ++i)
            if (reduced.basis_[i].bit(free)) v.set_bit(reduced.pivots_[i], true);
        kernel.push_back(std::move(v));
    }
    return span(n_, kernel);
}

Gf2Subspace intersect(const Gf2Subspace& s, const Gf2Subspace& t) {
    if (s.n() != t.n()) throw DimensionMismatchError("intersect: ambient dimension mismatch");
    std::vector<SympVector> rows;
    const Gf2Subspace ds = s.symplectic_dual(), dt = t.symplectic_dual();
    rows.insert(rows.end(), ds.basis().begin(), ds.basis().end());
    rows.insert(rows.end(), dt.basis().begin(), dt.basis().end());
    return Gf2Subspace::span(s.n(), rows).symplectic_dual();
}

}  // namespace qsqc
