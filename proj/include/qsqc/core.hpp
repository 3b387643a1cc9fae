#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsqc/quotient.hpp"
#include "qsqc/stabilizer.hpp"

namespace qsqc {

class DuplicateCosetError : public Error {
public:
    DuplicateCosetError(int first, int second)
        : Error("representatives " + std::to_string(first) + " and " + std::to_string(second) +
                " name the same coset"),
          first(first),
          second(second) {}
    int first, second;
};

/// A quotient space code: a finite set Omega of distinct cosets of C_perp,
/// with distance the minimum pairwise coset distance (infinite when L = 1).
struct QscCode {
    QuotientSpace space;                    // over C_perp
    std::vector<Coset> cosets;              // distinct; zero coset first when translated
    std::optional<SympVector> translation;  // subtracted from the input reps, if any
    std::optional<int> distance;            // nullopt iff L == 1

    int L() const { return static_cast<int>(cosets.size()); }
    int length() const { return space.dim(); }  // n - k for modulus C_perp
    bool contains_coset(const Coset& c) const;
};

/// Canonicalizes reps over C_perp, rejects duplicates, translates so the zero
/// coset is a member whenever it is not already, and computes the distance.
QscCode build_qsc(const StabilizerCode& code, std::span<const SympVector> reps,
                  NormMode mode = NormMode::quantum);

/// The verified parameters ((n, 2^k L, d)) plus the condition checklist.
struct QsqcCertificate {
    int n = 0, k = 0, L = 0, claimed_d = 0;
    struct Conditions {
        bool self_orthogonal = false;
        bool d_le_dm = false;
        bool qsc_distance_ok = false;
        bool measurement_ok = false;
        bool all() const { return self_orthogonal && d_le_dm && qsc_distance_ok && measurement_ok; }
    } conditions;
    struct Flags {
        bool additive = false;    // L == 1
        bool cws = false;         // k == 0
        bool degenerate = false;  // s > 0
    } flags;
    int s = 0;
    MinWeight dm;
    MinWeight containing_d;  // d_s of the containing additive code [[n, n-s, d_s]]
    std::optional<int> qsc_distance;
    int required_distance = 0;  // d for the quantum norm, 2d-1 under the Hamming norm
    NormMode norm_mode = NormMode::quantum;
    std::optional<SympVector> translation;
    bool certified = false;
    std::string reject_reason;  // first failed condition, empty when certified
    std::string witness;        // offending pair or vector, when rejected

    std::uint64_t code_dimension() const {
        return (std::uint64_t{1} << k) * static_cast<std::uint64_t>(L);
    }
    std::string parameters() const;  // "((n, 2^k*L, d))"
};

/// Checks, in order: C self-orthogonal; d <= d_m (vacuous when d_m infinite);
/// pairwise coset distance >= d (>= 2d-1 under the Hamming norm; vacuous when
/// L = 1); and the measurement condition that all pairwise differences of
/// Omega lie in C(d-1)_perp. Never throws for a failed condition - the
/// certificate carries the first failure and a witness.
QsqcCertificate verify(const StabilizerCode& code, const QscCode& qsc, int d);

/// Labels: additive/cws when applicable plus degenerate or nondegenerate.
std::vector<std::string> classify(const QsqcCertificate& cert);

/// delta: minimum quantum weight over nonzero differences of the union code
/// Omega_* (the set of all vectors in all cosets of Omega).
int classical_union_distance(const StabilizerCode& code, const QscCode& qsc);

/// Distance of Omega as a union code: min weight over nonzero differences of
/// Omega_* that act nontrivially on the code, i.e. excluding the elements of
/// C symplectically orthogonal to every vector of Omega_*.
struct UstReport {
    std::optional<int> distance;  // nullopt: every difference is excluded
    int delta = 0;                // classical_union_distance
    bool strict = false;          // distance > delta
    std::string exclusion_rule;   // the reading of the excluded set, for audit
};

UstReport ust_distance(const StabilizerCode& code, const QscCode& qsc);

}  // namespace qsqc
