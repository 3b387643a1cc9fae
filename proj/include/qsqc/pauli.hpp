#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsqc/gf2.hpp"

namespace qsqc {

/// Number of qubit positions where the error acts nontrivially.
int quantum_weight(const SympVector& v);

/// Popcount of all 2n bits. quantum_weight <= hamming_weight <= 2*quantum_weight.
int hamming_weight(const SympVector& v);

/// sum_{i=0..t} 3^i * C(n,i): the number of errors of quantum weight <= t.
std::uint64_t error_count(int n, int t);

/// Streams every vector of quantum weight <= t exactly once, in
/// weight-then-lexicographic order (the zero vector first).
void enumerate_errors(int n, int t, const std::function<void(const SympVector&)>& fn);

/// Collected form of enumerate_errors.
std::vector<SympVector> all_errors_upto(int n, int t);

/// A word over GF(4) = {0, 1, w, w2} with w2 = w^2 = w + 1.
/// Symbols are encoded as 2*a + b for the element a*w + b*w2 so that
/// addition is XOR; 1 = w + w2 is encoded as 3.
class Gf4Vector {
public:
    Gf4Vector() = default;
    explicit Gf4Vector(int n) : entries_(static_cast<std::size_t>(n), 0) {}

    int n() const { return static_cast<int>(entries_.size()); }
    std::uint8_t entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    void set_entry(int i, std::uint8_t sym) { entries_[static_cast<std::size_t>(i)] = sym & 3; }

    int hamming_weight() const;

    Gf4Vector& operator+=(const Gf4Vector& rhs);
    friend Gf4Vector operator+(Gf4Vector lhs, const Gf4Vector& rhs) { return lhs += rhs; }
    bool operator==(const Gf4Vector&) const = default;

    /// Hermitian trace form Tr(sum_i x_i * conj(y_i)); equals the symplectic
    /// inner product of the preimages under the coordinatewise map below.
    friend int trace_inner(const Gf4Vector& x, const Gf4Vector& y);

private:
    std::vector<std::uint8_t> entries_;
};

std::uint8_t gf4_mul(std::uint8_t x, std::uint8_t y);
std::uint8_t gf4_conj(std::uint8_t x);  // x^2
int gf4_trace(std::uint8_t x);          // x + x^2, landing in F_2

/// Coordinatewise (a_i, b_i) -> a_i*w + b_i*w2. F_2-linear, bijective,
/// GF(4) Hamming weight of the image equals the quantum weight.
Gf4Vector psi_map(const SympVector& v);

}  // namespace qsqc
