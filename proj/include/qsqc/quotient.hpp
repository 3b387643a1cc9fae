#pragma once

#include <cstdint>
#include <memory>

#include "qsqc/gf2.hpp"
#include "qsqc/pauli.hpp"

namespace qsqc {

class TooLargeError : public Error {
public:
    using Error::Error;
};

enum class NormMode { quantum, hamming };

int weight_of(const SympVector& v, NormMode mode);

class Coset;

/// The normed quotient space F_2^{2n} / H. Canonical coset representatives
/// are the RREF residues (zero at every pivot coordinate of H), which is
/// simultaneously the projection onto the complement spanned by the non-pivot
/// unit vectors. Cheap to copy; immutable.
class QuotientSpace {
public:
    explicit QuotientSpace(Gf2Subspace modulus, NormMode mode = NormMode::quantum);

    const Gf2Subspace& modulus() const;
    NormMode norm_mode() const;
    int n() const;
    int ambient_dim() const;
    /// 2n - dim H; the number of cosets is 2^dim().
    int dim() const;

    Coset canonicalize(const SympVector& v) const;
    Coset zero_coset() const;

    bool operator==(const QuotientSpace& rhs) const;

private:
    struct Impl {
        Gf2Subspace modulus;
        NormMode mode;
    };
    std::shared_ptr<const Impl> impl_;
};

/// One element of a quotient space, held by its canonical representative.
/// Two cosets are equal iff their representatives are bitwise equal.
class Coset {
public:
    Coset() = default;

    const SympVector& rep() const { return rep_; }
    const QuotientSpace& space() const { return space_; }
    bool is_zero() const { return rep_.is_zero(); }

    Coset operator+(const Coset& rhs) const;
    bool operator==(const Coset& rhs) const;
    bool lex_less(const Coset& rhs) const { return rep_.lex_less(rhs.rep_); }

private:
    friend class QuotientSpace;
    Coset(QuotientSpace space, SympVector rep) : space_(std::move(space)), rep_(std::move(rep)) {}

    QuotientSpace space_;
    SympVector rep_;
};

/// Quotient minimum norm: the smallest weight over all vectors in the coset.
/// Zero iff the coset is the zero coset.
int quotient_min_norm(const Coset& x);

/// Quotient projection norm: Hamming weight of the canonical representative.
/// Always >= the Hamming-mode minimum norm.
int quotient_proj_norm(const Coset& x);

/// d(x,y) = min norm of the difference coset; translation invariant.
int coset_distance(const Coset& x, const Coset& y);

/// (-1)^{(rep_i, c)_s}. Representative-independent whenever c lies in the
/// symplectic dual of the modulus.
int character_eval(const Coset& i, const SympVector& c);

/// |ME(t)|: the number of distinct cosets of `space` that have a
/// representative of weight <= t and lie inside `restriction` (which must
/// contain the modulus, so cosets are wholly inside or wholly outside).
std::uint64_t me_count(const QuotientSpace& space, const Gf2Subspace& restriction, int t);

}  // namespace qsqc
