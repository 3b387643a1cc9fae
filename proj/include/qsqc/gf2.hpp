#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsqc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// An element (a|b) of F_2^{2n}: the image of a Pauli error on n qubits.
/// Bits [0,n) hold a (the X part), bits [n,2n) hold b (the Z part).
/// Addition is coordinatewise XOR.
class SympVector {
public:
    SympVector() = default;
    explicit SympVector(int n) : n_(check_n(n)), w_(word_count(n)) {}

    static SympVector zero(int n) { return SympVector(n); }

    int n() const { return n_; }
    int ambient_dim() const { return 2 * n_; }

    bool bit(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set_bit(int i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    bool a_bit(int i) const { return bit(i); }
    bool b_bit(int i) const { return bit(n_ + i); }

    bool is_zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    SympVector& operator+=(const SympVector& rhs) {
        require_same_n(rhs);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= rhs.w_[i];
        return *this;
    }
    friend SympVector operator+(SympVector lhs, const SympVector& rhs) { return lhs += rhs; }

    bool operator==(const SympVector&) const = default;

    /// Lexicographic by coordinate, coordinate 0 most significant.
    bool lex_less(const SympVector& rhs) const;

    /// Lowest set coordinate index, or -1 for the zero vector.
    int leading_bit() const;

    /// The a and b halves as right-aligned word blocks of ceil(n/64) words.
    std::vector<std::uint64_t> a_words() const { return extract(0, n_); }
    std::vector<std::uint64_t> b_words() const { return extract(n_, n_); }

    /// (b|a) - halves swapped; symplectic duality reduces to plain orthogonality
    /// against the swapped vectors.
    SympVector swap_halves() const;

    std::span<const std::uint64_t> words() const { return w_; }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
        for (auto w : w_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    /// "a|b" with '0'/'1' characters, coordinate 0 first.
    std::string to_string() const;

private:
    static int check_n(int n) {
        if (n < 0) throw Error("qubit count must be nonnegative");
        return n;
    }
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(2 * n) + 63) / 64; }
    void require_same_n(const SympVector& rhs) const {
        if (n_ != rhs.n_) throw DimensionMismatchError("symplectic vectors of different length");
    }
    std::vector<std::uint64_t> extract(int start, int len) const;

    int n_ = 0;
    std::vector<std::uint64_t> w_;

    friend int symplectic_inner(const SympVector&, const SympVector&);
};

struct SympVectorHash {
    std::size_t operator()(const SympVector& v) const { return v.hash(); }
};

/// (c1,c2)_s = a.b' + a'.b mod 2. Zero iff the lifted Pauli operators commute.
int symplectic_inner(const SympVector& u, const SympVector& v);

/// A subspace of F_2^{2n} held as a canonical reduced row-echelon basis,
/// pivots at the lowest possible coordinate indices. Identical subspaces
/// produce bitwise-identical bases, so equality is basis equality.
class Gf2Subspace {
public:
    Gf2Subspace() = default;

    /// The zero subspace (dim 0) of F_2^{2n}.
    static Gf2Subspace zero(int n) { return Gf2Subspace(n); }

    /// All of F_2^{2n}.
    static Gf2Subspace full(int n);

    /// Canonical RREF basis of the span. Empty input gives the zero subspace,
    /// but n must then be supplied via the vectors, so it is disallowed.
    static Gf2Subspace span(std::span<const SympVector> vectors);
    static Gf2Subspace span(int n, std::span<const SympVector> vectors);

    int n() const { return n_; }
    int ambient_dim() const { return 2 * n_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    const std::vector<SympVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Canonical residue of v: zero at every pivot coordinate.
    /// reduce(v) == reduce(w) iff v + w is in the subspace.
    SympVector reduce(SympVector v) const;

    bool contains(const SympVector& v) const { return reduce(std::move(v)).is_zero(); }
    bool contains_subspace(const Gf2Subspace& other) const;

    /// { w : (w,s)_s = 0 for all s in the subspace }. dim + dual dim = 2n.
    Gf2Subspace symplectic_dual() const;

    bool operator==(const Gf2Subspace&) const = default;

    /// Visits every element, starting from zero, via Gray-code single-row
    /// XOR steps. fn(const SympVector&) is called 2^dim times.
    template <class F>
    void for_each_element(F&& fn) const {
        SympVector cur(n_);
        fn(static_cast<const SympVector&>(cur));
        if (basis_.empty()) return;
        const std::uint64_t total = std::uint64_t{1} << dim();
        for (std::uint64_t i = 1; i < total; ++i) {
            int j = 0;
            while (!((i >> j) & 1)) ++j;
            cur += basis_[static_cast<std::size_t>(j)];
            fn(static_cast<const SympVector&>(cur));
        }
    }

private:
    explicit Gf2Subspace(int n) : n_(check_n(n)) {}
    static int check_n(int n) {
        if (n < 0) throw Error("qubit count must be nonnegative");
        return n;
    }
    void require_same_n(int n) const {
        if (n_ != n) throw DimensionMismatchError("ambient dimension mismatch");
    }

    int n_ = 0;
    std::vector<SympVector> basis_;
    std::vector<int> pivots_;
};

/// RREF of a list of vectors sharing the same n.
Gf2Subspace rref(std::span<const SympVector> vectors);

/// S ∩ T, computed through symplectic duals (the dual is an involution).
Gf2Subspace intersect(const Gf2Subspace& s, const Gf2Subspace& t);

}  // namespace qsqc
