#include "cb6/boolfun.hpp"

#include <algorithm>
#include <cstdlib>

#include "cb6/errors.hpp"

namespace cb6 {

namespace {

void check_table_vars(int n, const char* what) {
    if (n < 0 || n > kMaxTruthTableVars)
        throw capacity_error(std::string(what) + ": " + std::to_string(n) +
                             " variables exceeds the limit of " +
                             std::to_string(kMaxTruthTableVars));
}

// GF(2) zeta/Moebius transform over the subset lattice; self-inverse.
// Maps ANF coefficients to the truth table and back.
void mobius_transform(std::vector<uint8_t>& v, int n) {
    for (int i = 0; i < n; ++i) {
        size_t bit = size_t(1) << i;
        for (size_t x = 0; x < v.size(); ++x)
            if (x & bit) v[x] ^= v[x ^ bit];
    }
}

} // namespace

size_t TruthTable::weight() const {
    size_t w = 0;
    for (uint8_t b : bits) w += b;
    return w;
}

int32_t WalshSpectrum::max_abs() const {
    int32_t m = 0;
    for (int32_t v : values) m = std::max(m, std::abs(v));
    return m;
}

TruthTable anf_to_truth_table(const AnfPolynomial& f) {
    check_table_vars(f.n_vars(), "anf_to_truth_table");
    TruthTable t;
    t.n_vars = f.n_vars();
    t.bits.assign(size_t(1) << f.n_vars(), 0);
    for (uint64_t m : f.monomials()) t.bits[m] = 1;
    mobius_transform(t.bits, f.n_vars());
    return t;
}

AnfPolynomial truth_table_to_anf(const TruthTable& t) {
    check_table_vars(t.n_vars, "truth_table_to_anf");
    if (t.bits.size() != size_t(1) << t.n_vars)
        throw validation_error("truth table length does not match variable count");
    std::vector<uint8_t> coeff = t.bits;
    mobius_transform(coeff, t.n_vars);
    std::vector<uint64_t> monos;
    for (size_t m = 0; m < coeff.size(); ++m)
        if (coeff[m]) monos.push_back(m);
    return AnfPolynomial(t.n_vars, std::move(monos));
}

WalshSpectrum walsh_transform(const TruthTable& t) {
    check_table_vars(t.n_vars, "walsh_transform");
    if (t.bits.size() != size_t(1) << t.n_vars)
        throw validation_error("truth table length does not match variable count");
    WalshSpectrum w;
    w.n_vars = t.n_vars;
    w.values.resize(t.bits.size());
    for (size_t x = 0; x < t.bits.size(); ++x) w.values[x] = t.bits[x] ? -1 : 1;
    for (size_t h = 1; h < w.values.size(); h <<= 1) {
        for (size_t i = 0; i < w.values.size(); i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                int32_t a = w.values[j];
                int32_t b = w.values[j + h];
                w.values[j] = a + b;
                w.values[j + h] = a - b;
            }
        }
    }
    return w;
}

int nonlinearity(const WalshSpectrum& w) {
    return int((size_t(1) << w.n_vars) / 2 - size_t(w.max_abs()) / 2);
}

bool is_bent(const WalshSpectrum& w) {
    if (w.n_vars % 2 != 0)
        throw validation_error("bentness is defined for an even number of variables");
    int32_t flat = int32_t(1) << (w.n_vars / 2);
    for (int32_t v : w.values)
        if (std::abs(v) != flat) return false;
    return true;
}

namespace {

// Rank of a GF(2) matrix given as bitset rows.
int gf2_rank(std::vector<std::vector<uint64_t>> rows) {
    int rank = 0;
    size_t words = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < words * 64; ++col) {
        size_t w = col >> 6;
        uint64_t bit = uint64_t(1) << (col & 63);
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != size_t(rank) && (rows[r][w] & bit))
                for (size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
        }
        ++rank;
        if (size_t(rank) == rows.size()) break;
    }
    return rank;
}

// True iff some nonzero g of degree <= d vanishes on all of supp.
bool annihilator_exists(const std::vector<uint64_t>& supp, int n, int d) {
    std::vector<uint64_t> monos;
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m)
        if (__builtin_popcountll(m) <= d) monos.push_back(m);
    size_t words = (monos.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(supp.size());
    for (uint64_t x : supp) {
        std::vector<uint64_t> row(words, 0);
        for (size_t j = 0; j < monos.size(); ++j)
            if ((x & monos[j]) == monos[j]) row[j >> 6] |= uint64_t(1) << (j & 63);
        rows.push_back(std::move(row));
    }
    return size_t(gf2_rank(std::move(rows))) < monos.size();
}

} // namespace

int algebraic_immunity(const TruthTable& t) {
    if (t.n_vars > kMaxImmunityVars)
        throw capacity_error("algebraic_immunity: " + std::to_string(t.n_vars) +
                             " variables exceeds the limit of " +
                             std::to_string(kMaxImmunityVars));
    size_t w = t.weight();
    if (w == 0 || w == t.bits.size()) return 0; // constant, annihilated by 1
    std::vector<uint64_t> supp1, supp0;
    for (size_t x = 0; x < t.bits.size(); ++x)
        (t.bits[x] ? supp1 : supp0).push_back(x);
    for (int d = 1; d <= t.n_vars; ++d)
        if (annihilator_exists(supp1, t.n_vars, d) || annihilator_exists(supp0, t.n_vars, d))
            return d;
    return t.n_vars; // unreachable: d = n always admits an annihilator
}

int algebraic_immunity(const AnfPolynomial& f) {
    if (f.n_vars() > kMaxImmunityVars)
        throw capacity_error("algebraic_immunity: " + std::to_string(f.n_vars()) +
                             " variables exceeds the limit of " +
                             std::to_string(kMaxImmunityVars));
    return algebraic_immunity(anf_to_truth_table(f));
}

int64_t agreement_count(const WalshSpectrum& w, uint64_t mask) {
    if (mask >= w.values.size())
        throw validation_error("Walsh mask out of range");
    return ((int64_t(1) << w.n_vars) + w.values[mask]) / 2;
}

double correlation_probability(const WalshSpectrum& w, uint64_t mask) {
    return double(agreement_count(w, mask)) / double(int64_t(1) << w.n_vars);
}

} // namespace cb6
