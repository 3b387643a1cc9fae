#include "qsqc/bounds.hpp"

namespace qsqc {

BoundReport hamming_type(const StabilizerCode& code, const QsqcCertificate& cert) {
    BoundReport r;
    r.bound_name = "hamming-type";
    const int d = cert.claimed_d;
    const int t = (d - 1) / 2;
    const DegeneracyProfile profile = degeneracy_profile(code, d);
    const std::uint64_t me = me_count(QuotientSpace(code.dual()), profile.span_dual, t);
    r.detail = {cert.n, cert.k, cert.L, d, profile.s, t, -1, me};
    r.lhs = (std::uint64_t{1} << cert.k) * static_cast<std::uint64_t>(cert.L) * me;
    r.rhs = std::uint64_t{1} << (cert.n - profile.s);
    r.alt_lhs = static_cast<std::uint64_t>(cert.L) * me;
    r.alt_rhs = std::uint64_t{1} << (cert.n - cert.k - profile.s);
    r.holds = r.lhs <= r.rhs;
    return r;
}

BoundReport gv_type(const StabilizerCode& code, int d, int L) {
    if (L < 1) throw Error("gv_type needs L >= 1");
    BoundReport r;
    r.bound_name = "gv-type";
    const int t = d - 1;
    const DegeneracyProfile profile = degeneracy_profile(code, d);
    const std::uint64_t me = me_count(QuotientSpace(code.dual()), profile.span_dual, t);
    r.detail = {code.n(), code.k(), L, d, profile.s, t, -1, me};
    r.lhs = (std::uint64_t{1} << code.k()) * static_cast<std::uint64_t>(L) * me;
    r.rhs = std::uint64_t{1} << (code.n() - profile.s);
    r.alt_lhs = static_cast<std::uint64_t>(L) * me;
    r.alt_rhs = std::uint64_t{1} << (code.n() - code.k() - profile.s);
    r.holds = r.lhs < r.rhs;  // strict: promises an (L+1)-coset extension
    return r;
}

BoundReport singleton_bound(int n, int k, int l, int d) {
    BoundReport r;
    r.bound_name = "singleton";
    r.detail.n = n;
    r.detail.k = k;
    r.detail.l = l;
    r.detail.d = d;
    r.applicable = (((n - k) % 2) == 0) && ((l % 2) == 0);
    if (r.applicable) {
        r.lhs = static_cast<std::uint64_t>(n);
        r.rhs = static_cast<std::uint64_t>(k + l + 2 * d - 2);
        r.holds = n >= k + l + 2 * d - 2;
    }
    return r;
}

BoundReport singleton_for(const QsqcCertificate& cert) {
    const std::uint64_t L = static_cast<std::uint64_t>(cert.L);
    if ((L & (L - 1)) != 0) {
        BoundReport r;
        r.bound_name = "singleton";
        r.detail = {cert.n, cert.k, cert.L, cert.claimed_d, cert.s, 0, -1, 0};
        r.applicable = false;  // l = log2 L is not an integer
        return r;
    }
    int l = 0;
    while ((std::uint64_t{1} << l) < L) ++l;
    BoundReport r = singleton_bound(cert.n, cert.k, l, cert.claimed_d);
    r.detail.L = cert.L;
    r.detail.s = cert.s;
    return r;
}

BoundReport general_hamming_compare(const StabilizerCode& code, int d) {
    BoundReport r;
    r.bound_name = "general-hamming-compare";
    const int t = (d - 1) / 2;
    const DegeneracyProfile profile = degeneracy_profile(code, d);
    const std::uint64_t me = me_count(QuotientSpace(code.dual()), profile.span_dual, t);
    r.detail = {code.n(), code.k(), 0, d, profile.s, t, -1, me};
    r.lhs = error_count(code.n(), t);
    r.rhs = (std::uint64_t{1} << profile.s) * me;
    r.holds = r.lhs <= r.rhs;  // the conjectured direction; informational only
    return r;
}

}  // namespace qsqc
