#pragma once

#include <optional>

#include "qsqc/gf2.hpp"
#include "qsqc/pauli.hpp"

namespace qsqc {

class NotSelfOrthogonalError : public Error {
public:
    NotSelfOrthogonalError(int row_i, int row_j)
        : Error("rows " + std::to_string(row_i) + " and " + std::to_string(row_j) +
                " are not symplectically orthogonal"),
          row_i(row_i),
          row_j(row_j) {}
    int row_i, row_j;
};

/// Minimum nonzero weight of a set, or "none found".
/// `exact` is false only when a weight-limited search ran out of budget, in
/// which case `searched_up_to` is the largest radius fully excluded.
struct MinWeight {
    std::optional<int> weight;  // nullopt: no nonzero element (infinite)
    bool exact = true;
    int searched_up_to = 0;

    bool is_infinite() const { return exact && !weight.has_value(); }
};

/// Full enumeration is used up to this subspace dimension; larger spaces fall
/// back to a weight-limited scan that may return a bound instead of a value.
inline constexpr int kEnumerationDimLimit = 20;

/// Minimum quantum weight over the nonzero elements of S.
MinWeight min_quantum_weight(const Gf2Subspace& s, int weight_cap = 6);

/// Minimum quantum weight over space \ excluded (excluded must be a subspace
/// of space for the complement reading to make sense).
MinWeight min_quantum_weight_excluding(const Gf2Subspace& space, const Gf2Subspace& excluded,
                                       int weight_cap = 6);

/// A symplectic self-orthogonal code C <= C_perp in F_2^{2n}, dim C = n-k,
/// with its symplectic dual cached.
class StabilizerCode {
public:
    /// Throws NotSelfOrthogonalError naming a violating basis pair.
    static StabilizerCode analyze(std::span<const SympVector> rows);
    static StabilizerCode analyze(int n, std::span<const SympVector> rows);

    int n() const { return code_.n(); }
    int k() const { return n() - code_.dim(); }
    const Gf2Subspace& code() const { return code_; }
    const Gf2Subspace& dual() const { return dual_; }
    bool self_dual() const { return code_ == dual_; }

    /// min{ w_Q(c) : c in C_perp \ C }; infinite when C is self-dual.
    const MinWeight& dm() const { return dm_; }

private:
    StabilizerCode(Gf2Subspace code, Gf2Subspace dual, MinWeight dm)
        : code_(std::move(code)), dual_(std::move(dual)), dm_(dm) {}

    Gf2Subspace code_;
    Gf2Subspace dual_;
    MinWeight dm_;
};

/// The low-weight structure of C at a target distance d: the elements of C
/// with quantum weight in (0, d-1], their span (dimension s), the dual of the
/// span, and d_s = min weight over span_dual \ span. s == 0 means the code is
/// nondegenerate at d.
struct DegeneracyProfile {
    int d = 0;
    std::vector<SympVector> lowweight;
    int s = 0;
    Gf2Subspace span;
    Gf2Subspace span_dual;
    MinWeight d_s;
};

DegeneracyProfile degeneracy_profile(const StabilizerCode& code, int d);

}  // namespace qsqc
