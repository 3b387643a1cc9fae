#include "qsqc/pauli.hpp"

#include <algorithm>
#include <bit>

namespace qsqc {

int quantum_weight(const SympVector& v) {
    const auto a = v.a_words(), b = v.b_words();
    int w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += std::popcount(a[i] | b[i]);
    return w;
}

int hamming_weight(const SympVector& v) {
    int w = 0;
    for (auto word : v.words()) w += std::popcount(word);
    return w;
}

std::uint64_t error_count(int n, int t) {
    std::uint64_t total = 0, binom = 1, pow3 = 1;
    for (int i = 0; i <= t; ++i) {
        total += binom * pow3;
        binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
        pow3 *= 3;
    }
    return total;
}

namespace {

// Pauli letters on one position: X=(1,0), Z=(0,1), Y=(1,1).
constexpr int kLetterA[3] = {1, 0, 1};
constexpr int kLetterB[3] = {0, 1, 1};

void emit_weight_class(int n, int w, std::vector<SympVector>& out) {
    if (w == 0) {
        out.emplace_back(n);
        return;
    }
    std::vector<int> support(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) support[static_cast<std::size_t>(i)] = i;
    std::vector<int> letter(static_cast<std::size_t>(w), 0);
    while (true) {
        // all 3^w letter assignments on the current support
        std::fill(letter.begin(), letter.end(), 0);
        while (true) {
            SympVector v(n);
            for (int i = 0; i < w; ++i) {
                const int pos = support[static_cast<std::size_t>(i)];
                const int l = letter[static_cast<std::size_t>(i)];
                if (kLetterA[l]) v.set_bit(pos, true);
                if (kLetterB[l]) v.set_bit(n + pos, true);
            }
            out.push_back(std::move(v));
            int j = w - 1;
            while (j >= 0 && letter[static_cast<std::size_t>(j)] == 2) {
                letter[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++letter[static_cast<std::size_t>(j)];
        }
        // next support combination
        int j = w - 1;
        while (j >= 0 && support[static_cast<std::size_t>(j)] == n - w + j) --j;
        if (j < 0) break;
        ++support[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < w; ++i)
            support[static_cast<std::size_t>(i)] = support[static_cast<std::size_t>(i - 1)] + 1;
    }
}

}  // namespace

void enumerate_errors(int n, int t, const std::function<void(const SympVector&)>& fn) {
    if (t < 0 || t > n) throw Error("error enumeration radius out of range");
    for (int w = 0; w <= t; ++w) {
        std::vector<SympVector> batch;
        emit_weight_class(n, w, batch);
        std::sort(batch.begin(), batch.end(),
                  [](const SympVector& l, const SympVector& r) { return l.lex_less(r); });
        for (const auto& v : batch) fn(v);
    }
}

std::vector<SympVector> all_errors_upto(int n, int t) {
    std::vector<SympVector> out;
    out.reserve(error_count(n, t));
    enumerate_errors(n, t, [&](const SympVector& v) { out.push_back(v); });
    return out;
}

int Gf4Vector::hamming_weight() const {
    int w = 0;
    for (auto e : entries_) w += e != 0;
    return w;
}

Gf4Vector& Gf4Vector::operator+=(const Gf4Vector& rhs) {
    if (n() != rhs.n()) throw DimensionMismatchError("GF(4) vectors of different length");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] ^= rhs.entries_[i];
    return *this;
}

std::uint8_t gf4_mul(std::uint8_t x, std::uint8_t y) {
    // Encoding 2a+b of a*w + b*w2, with w*w = w2, w2*w2 = w, w*w2 = 1.
    static constexpr std::uint8_t table[4][4] = {
        {0, 0, 0, 0},
        {0, 2, 3, 1},  // w2*w2=w, w2*w=1, w2*1=w2
        {0, 3, 1, 2},
        {0, 1, 2, 3},
    };
    return table[x & 3][y & 3];
}

std::uint8_t gf4_conj(std::uint8_t x) { return gf4_mul(x, x); }

int gf4_trace(std::uint8_t x) {
    // Tr(0) = Tr(1) = 0, Tr(w) = Tr(w2) = 1; 1 is encoded as 3.
    return (x == 1 || x == 2) ? 1 : 0;
}

int trace_inner(const Gf4Vector& x, const Gf4Vector& y) {
    if (x.n() != y.n()) throw DimensionMismatchError("GF(4) vectors of different length");
    int acc = 0;
    for (int i = 0; i < x.n(); ++i) acc ^= gf4_trace(gf4_mul(x.entry(i), gf4_conj(y.entry(i))));
    return acc;
}

Gf4Vector psi_map(const SympVector& v) {
    Gf4Vector out(v.n());
    for (int i = 0; i < v.n(); ++i) {
        const std::uint8_t sym =
            static_cast<std::uint8_t>((v.a_bit(i) ? 2 : 0) | (v.b_bit(i) ? 1 : 0));
        out.set_entry(i, sym);
    }
    return out;
}

}  // namespace qsqc
