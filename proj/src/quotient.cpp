#include "qsqc/quotient.hpp"

#include <limits>
#include <unordered_set>

#include "qsqc/stabilizer.hpp"

namespace qsqc {

int weight_of(const SympVector& v, NormMode mode) {
    return mode == NormMode::quantum ? quantum_weight(v) : hamming_weight(v);
}

QuotientSpace::QuotientSpace(Gf2Subspace modulus, NormMode mode)
    : impl_(std::make_shared<const Impl>(Impl{std::move(modulus), mode})) {}

const Gf2Subspace& QuotientSpace::modulus() const { return impl_->modulus; }
NormMode QuotientSpace::norm_mode() const { return impl_->mode; }
int QuotientSpace::n() const { return impl_->modulus.n(); }
int QuotientSpace::ambient_dim() const { return impl_->modulus.ambient_dim(); }
int QuotientSpace::dim() const { return ambient_dim() - impl_->modulus.dim(); }

Coset QuotientSpace::canonicalize(const SympVector& v) const {
    return Coset(*this, impl_->modulus.reduce(v));
}

Coset QuotientSpace::zero_coset() const { return Coset(*this, SympVector(n())); }

bool QuotientSpace::operator==(const QuotientSpace& rhs) const {
    if (impl_ == rhs.impl_) return true;
    return impl_->mode == rhs.impl_->mode && impl_->modulus == rhs.impl_->modulus;
}

Coset Coset::operator+(const Coset& rhs) const {
    if (!(space_ == rhs.space_)) throw DimensionMismatchError("cosets of different spaces");
    return space_.canonicalize(rep_ + rhs.rep_);
}

bool Coset::operator==(const Coset& rhs) const {
    if (!(space_ == rhs.space_)) throw DimensionMismatchError("cosets of different spaces");
    return rep_ == rhs.rep_;
}

namespace {

// All n-qubit vectors with exactly w of the 2n bits set, one at a time.
// Returning true from fn stops the scan.
template <class F>
void for_each_hamming_shell(int n, int w, F&& fn) {
    const int m = 2 * n;
    std::vector<int> idx(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        SympVector v(n);
        for (int i : idx) v.set_bit(i, true);
        if (fn(static_cast<const SympVector&>(v))) return;
        if (w == 0) return;
        int j = w - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - w + j) --j;
        if (j < 0) return;
        ++idx[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < w; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

// Minimum weight over rep + H. Enumerates the coset when dim H is small,
// otherwise walks ambient vectors outward by weight until one lands in the
// coset (membership of v + rep in H).
int coset_min_weight(const SympVector& rep, const Gf2Subspace& h, NormMode mode) {
    if (h.dim() <= kEnumerationDimLimit + 2) {
        int best = std::numeric_limits<int>::max();
        h.for_each_element([&](const SympVector& elem) {
            best = std::min(best, weight_of(rep + elem, mode));
        });
        return best;
    }
    const int cap = weight_of(rep, mode);
    for (int w = 0; w <= cap; ++w) {
        bool found = false;
        if (mode == NormMode::quantum) {
            enumerate_errors(h.n(), w, [&](const SympVector& v) {
                if (found || quantum_weight(v) != w) return;
                if (h.contains(v + rep)) found = true;
            });
        } else {
            for_each_hamming_shell(h.n(), w,
                                   [&](const SympVector& v) { return found = h.contains(v + rep); });
        }
        if (found) return w;
    }
    return cap;  // the representative itself is always in the coset
}

}  // namespace

int quotient_min_norm(const Coset& x) {
    return coset_min_weight(x.rep(), x.space().modulus(), x.space().norm_mode());
}

int quotient_proj_norm(const Coset& x) { return hamming_weight(x.rep()); }

int coset_distance(const Coset& x, const Coset& y) { return quotient_min_norm(x + y); }

int character_eval(const Coset& i, const SympVector& c) {
    return symplectic_inner(i.rep(), c) ? -1 : 1;
}

std::uint64_t me_count(const QuotientSpace& space, const Gf2Subspace& restriction, int t) {
    if (!restriction.contains_subspace(space.modulus()))
        throw Error("me_count: restriction must contain the modulus");
    std::unordered_set<SympVector, SympVectorHash> seen;
    const auto consider = [&](const SympVector& v) {
        if (restriction.contains(v)) seen.insert(space.canonicalize(v).rep());
    };
    if (space.norm_mode() == NormMode::quantum) {
        enumerate_errors(space.n(), t, consider);
    } else {
        for (int w = 0; w <= std::min(t, space.ambient_dim()); ++w)
            for_each_hamming_shell(space.n(), w, [&](const SympVector& v) {
                consider(v);
                return false;
            });
    }
    return seen.size();
}

}  // namespace qsqc
