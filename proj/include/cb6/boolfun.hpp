#pragma once

#include <cstdint>
#include <vector>

#include "cb6/anf.hpp"

namespace cb6 {

// Exact combinatorial analysis is limited to table sizes that fit in memory.
inline constexpr int kMaxTruthTableVars = 24;
// Annihilator search is a GF(2) rank computation; cost grows fast with n.
inline constexpr int kMaxImmunityVars = 10;

struct TruthTable {
    int n_vars = 0;
    std::vector<uint8_t> bits; // 2^n_vars entries, bits[x] = f(x); bit i of x is variable x_i

    size_t weight() const;
};

struct WalshSpectrum {
    int n_vars = 0;
    // values[u] = sum_x (-1)^(f(x) ^ <u,x>). Positive means f agrees with
    // the linear function <u,x> more often than not.
    std::vector<int32_t> values;

    int32_t max_abs() const;
};

TruthTable anf_to_truth_table(const AnfPolynomial& f);
AnfPolynomial truth_table_to_anf(const TruthTable& t);

// Exact integer fast transform, O(n 2^n).
WalshSpectrum walsh_transform(const TruthTable& t);

// 2^(n-1) - max|W|/2: Hamming distance to the closest affine function.
int nonlinearity(const WalshSpectrum& w);

// |W(u)| = 2^(n/2) for every mask; n_vars must be even.
bool is_bent(const WalshSpectrum& w);

// Smallest d >= 1 with a nonzero annihilator of f or f^1 of degree <= d.
// Constant functions return 0 by convention (the constant 1 annihilates).
int algebraic_immunity(const TruthTable& t);
int algebraic_immunity(const AnfPolynomial& f);

// Number of inputs where f(x) == <u,x>; equals (2^n + W[u]) / 2.
int64_t agreement_count(const WalshSpectrum& w, uint64_t mask);

// agreement_count / 2^n. Exact in double (dyadic rational).
double correlation_probability(const WalshSpectrum& w, uint64_t mask);

} // namespace cb6
