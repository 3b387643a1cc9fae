#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsqc {

/// One bundled (C, Omega, d) instance with its published parameters.
struct ExampleCase {
    std::string name;        // "c8", "c81", ..., "c12", "c9", "c7"
    std::string family;      // "c8-family", "c12", "c9", "c7"
    const char* check_text;  // the stabilizer rows in "bits|bits" lines
    const char* omega_text;  // coset representatives, same grammar
    int d;                   // target distance
    int n;
    int k;
    int L;
    std::uint64_t dimension() const { return (std::uint64_t{1} << k) * static_cast<std::uint64_t>(L); }
};

/// All printed example codes, in publication order.
const std::vector<ExampleCase>& bundled_examples();

/// Lookup by case or family name; empty result if unknown.
std::vector<ExampleCase> examples_by_name(const std::string& name);

}  // namespace qsqc
