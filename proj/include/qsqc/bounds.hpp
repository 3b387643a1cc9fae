#pragma once

#include <cstdint>
#include <string>

#include "qsqc/core.hpp"

namespace qsqc {

/// One evaluated inequality with its parameter echo. `holds` is meaningful
/// only when `applicable` is true.
struct BoundReport {
    std::string bound_name;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool holds = false;
    bool applicable = true;
    struct Detail {
        int n = 0, k = 0, L = 0, d = 0, s = 0, t = 0, l = -1;
        std::uint64_t me = 0;
    } detail;
    // The same inequality with the 2^k factor divided out, for cross-checking
    // against either printed normalization.
    std::uint64_t alt_lhs = 0;
    std::uint64_t alt_rhs = 0;
};

/// Sphere-packing form 2^k * L * |ME(floor((d-1)/2))| <= 2^(n-s).
BoundReport hamming_type(const StabilizerCode& code, const QsqcCertificate& cert);

/// Existence form: if 2^k * L * |ME(d-1)| < 2^(n-s) then an (L+1)-coset code
/// of distance >= d exists (realizable via search extension).
BoundReport gv_type(const StabilizerCode& code, int d, int L);

/// n >= k + l + 2d - 2, applicable when n == k (mod 2) and l == 0 (mod 2).
BoundReport singleton_bound(int n, int k, int l, int d);

/// Same bound fed from a certificate; L must be a power of two for l to be
/// an integer, otherwise the report is marked not applicable.
BoundReport singleton_for(const QsqcCertificate& cert);

/// Exploratory comparison sum_{i<=t} 3^i C(n,i) vs 2^s |ME(t)|; reported,
/// never asserted.
BoundReport general_hamming_compare(const StabilizerCode& code, int d);

}  // namespace qsqc
