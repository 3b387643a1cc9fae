#include "qsqc/core.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace qsqc {

bool QscCode::contains_coset(const Coset& c) const {
    return std::find(cosets.begin(), cosets.end(), c) != cosets.end();
}

QscCode build_qsc(const StabilizerCode& code, std::span<const SympVector> reps, NormMode mode) {
    if (reps.empty()) throw Error("a quotient space code needs at least one representative");
    QuotientSpace space(code.dual(), mode);

    std::vector<Coset> cosets;
    cosets.reserve(reps.size());
    for (const auto& r : reps) {
        if (r.n() != code.n()) throw DimensionMismatchError("representative length mismatch");
        cosets.push_back(space.canonicalize(r));
    }
    for (std::size_t i = 0; i < cosets.size(); ++i)
        for (std::size_t j = i + 1; j < cosets.size(); ++j)
            if (cosets[i] == cosets[j])
                throw DuplicateCosetError(static_cast<int>(i), static_cast<int>(j));

    QscCode qsc{space, {}, std::nullopt, std::nullopt};
    const bool has_zero =
        std::any_of(cosets.begin(), cosets.end(), [](const Coset& c) { return c.is_zero(); });
    if (!has_zero) {
        const SympVector shift = cosets.front().rep();
        for (auto& c : cosets) c = space.canonicalize(c.rep() + shift);
        qsc.translation = shift;
    }
    qsc.cosets = std::move(cosets);

    if (qsc.cosets.size() > 1) {
        int best = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < qsc.cosets.size(); ++i)
            for (std::size_t j = i + 1; j < qsc.cosets.size(); ++j)
                best = std::min(best, coset_distance(qsc.cosets[i], qsc.cosets[j]));
        qsc.distance = best;
    }
    return qsc;
}

std::string QsqcCertificate::parameters() const {
    return "((" + std::to_string(n) + ", 2^" + std::to_string(k) + "*" + std::to_string(L) +
           " = " + std::to_string(code_dimension()) + ", " + std::to_string(claimed_d) + "))";
}

QsqcCertificate verify(const StabilizerCode& code, const QscCode& qsc, int d) {
    if (d < 1) throw Error("target distance must be positive");
    if (!(qsc.space.modulus() == code.dual()))
        throw Error("quotient space code does not live over this code's dual");

    QsqcCertificate cert;
    cert.n = code.n();
    cert.k = code.k();
    cert.L = qsc.L();
    cert.claimed_d = d;
    cert.norm_mode = qsc.space.norm_mode();
    cert.translation = qsc.translation;
    cert.dm = code.dm();
    cert.qsc_distance = qsc.distance;
    cert.required_distance = cert.norm_mode == NormMode::hamming ? 2 * d - 1 : d;

    // (i) C <= C_perp, witnessed pairwise on the basis.
    cert.conditions.self_orthogonal = true;
    const auto& rows = code.code().basis();
    for (std::size_t i = 0; i < rows.size() && cert.conditions.self_orthogonal; ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (symplectic_inner(rows[i], rows[j]) != 0) {
                cert.conditions.self_orthogonal = false;
                cert.witness = "rows " + std::to_string(i) + "," + std::to_string(j);
                break;
            }

    // (ii) d <= d_m, vacuous for self-dual C (k = 0 removes the restriction).
    const MinWeight& dm = cert.dm;
    cert.conditions.d_le_dm = !dm.weight.has_value() || d <= *dm.weight;
    if (!dm.exact && !dm.weight.has_value())
        cert.conditions.d_le_dm = dm.searched_up_to >= d - 1;  // all lighter radii excluded

    // (iii) minimum pairwise coset distance, vacuous for L = 1.
    cert.conditions.qsc_distance_ok =
        !qsc.distance.has_value() || *qsc.distance >= cert.required_distance;

    // (iv) all pairwise differences inside C(d-1)_perp.
    const DegeneracyProfile profile = degeneracy_profile(code, d);
    cert.s = profile.s;
    cert.containing_d = profile.d_s;
    cert.conditions.measurement_ok = true;
    std::string measurement_witness;
    for (std::size_t i = 0; i < qsc.cosets.size() && cert.conditions.measurement_ok; ++i)
        for (std::size_t j = i + 1; j < qsc.cosets.size(); ++j)
            if (!profile.span_dual.contains(qsc.cosets[i].rep() + qsc.cosets[j].rep())) {
                cert.conditions.measurement_ok = false;
                measurement_witness = "cosets " + std::to_string(i) + "," + std::to_string(j);
                break;
            }

    cert.flags.additive = cert.L == 1;
    cert.flags.cws = cert.k == 0;
    cert.flags.degenerate = cert.s > 0;

    cert.certified = cert.conditions.all();
    if (!cert.certified) {
        if (!cert.conditions.self_orthogonal) {
            cert.reject_reason = "self_orthogonal";
        } else if (!cert.conditions.d_le_dm) {
            cert.reject_reason = "d_le_dm";
            cert.witness = dm.weight ? "d_m = " + std::to_string(*dm.weight)
                                     : "d_m only bounded below " + std::to_string(dm.searched_up_to);
        } else if (!cert.conditions.qsc_distance_ok) {
            cert.reject_reason = "qsc_distance";
            int bi = -1, bj = -1, best = std::numeric_limits<int>::max();
            for (std::size_t i = 0; i < qsc.cosets.size(); ++i)
                for (std::size_t j = i + 1; j < qsc.cosets.size(); ++j) {
                    const int dij = coset_distance(qsc.cosets[i], qsc.cosets[j]);
                    if (dij < best) best = dij, bi = static_cast<int>(i), bj = static_cast<int>(j);
                }
            cert.witness = "cosets " + std::to_string(bi) + "," + std::to_string(bj) +
                           " at distance " + std::to_string(best);
        } else {
            cert.reject_reason = "measurement";
            cert.witness = measurement_witness;
        }
    }
    return cert;
}

std::vector<std::string> classify(const QsqcCertificate& cert) {
    std::vector<std::string> labels;
    if (cert.flags.additive) labels.push_back("additive");
    if (cert.flags.cws) labels.push_back("cws");
    labels.push_back(cert.flags.degenerate ? "degenerate" : "nondegenerate");
    return labels;
}

namespace {

void require_enumerable_union(const StabilizerCode& code) {
    if (code.dual().dim() > kEnumerationDimLimit + 2)
        throw TooLargeError("union code enumeration needs dim C_perp <= " +
                            std::to_string(kEnumerationDimLimit + 2));
}

}  // namespace

int classical_union_distance(const StabilizerCode& code, const QscCode& qsc) {
    require_enumerable_union(code);
    // Differences of Omega_* fall into the cosets (rep_i + rep_j) + C_perp;
    // the i = j part contributes C_perp itself, minus the zero vector.
    int best = std::numeric_limits<int>::max();
    const NormMode mode = qsc.space.norm_mode();
    code.dual().for_each_element([&](const SympVector& v) {
        if (!v.is_zero()) best = std::min(best, weight_of(v, mode));
    });
    std::unordered_set<SympVector, SympVectorHash> seen_diffs;
    for (std::size_t i = 0; i < qsc.cosets.size(); ++i)
        for (std::size_t j = i + 1; j < qsc.cosets.size(); ++j) {
            const Coset diff = qsc.cosets[i] + qsc.cosets[j];
            if (seen_diffs.insert(diff.rep()).second)
                best = std::min(best, quotient_min_norm(diff));
        }
    return best;
}

UstReport ust_distance(const StabilizerCode& code, const QscCode& qsc) {
    require_enumerable_union(code);
    UstReport report;
    report.exclusion_rule =
        "excluded = { c in C : (c, w)_s = 0 for every vector w of the union code }";
    report.delta = classical_union_distance(code, qsc);

    // Orthogonality to every vector of Omega_* reduces to orthogonality to
    // the representatives: the C_perp part is automatic for c in C.
    std::vector<SympVector> reps;
    reps.reserve(qsc.cosets.size());
    for (const auto& c : qsc.cosets) reps.push_back(c.rep());
    const Gf2Subspace excluded =
        intersect(code.code(), Gf2Subspace::span(code.n(), reps).symplectic_dual());

    const NormMode mode = qsc.space.norm_mode();
    int best = std::numeric_limits<int>::max();
    // i = j differences: C_perp \ {0}.
    code.dual().for_each_element([&](const SympVector& v) {
        if (v.is_zero() || excluded.contains(v)) return;
        best = std::min(best, weight_of(v, mode));
    });
    // i != j differences, coset by coset.
    std::unordered_set<SympVector, SympVectorHash> seen_diffs;
    for (std::size_t i = 0; i < qsc.cosets.size(); ++i)
        for (std::size_t j = i + 1; j < qsc.cosets.size(); ++j) {
            const Coset diff = qsc.cosets[i] + qsc.cosets[j];
            if (!seen_diffs.insert(diff.rep()).second) continue;
            code.dual().for_each_element([&](const SympVector& h) {
                const SympVector v = diff.rep() + h;
                if (excluded.contains(v)) return;
                best = std::min(best, weight_of(v, mode));
            });
        }
    if (best != std::numeric_limits<int>::max()) report.distance = best;
    report.strict = report.distance.has_value() && *report.distance > report.delta;
    return report;
}

}  // namespace qsqc
