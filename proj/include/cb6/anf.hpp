#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cb6 {

// Boolean function in algebraic normal form: an XOR of AND-monomials.
// A monomial is a bitmask of variable indices; mask 0 is the constant 1.
// The monomial list is kept sorted and XOR-reduced (no duplicates).
class AnfPolynomial {
public:
    AnfPolynomial() = default;
    AnfPolynomial(int n_vars, std::vector<uint64_t> monomials);

    int n_vars() const { return n_; }
    const std::vector<uint64_t>& monomials() const { return monos_; }

    bool is_zero() const { return monos_.empty(); }
    bool has_constant_term() const { return !monos_.empty() && monos_.front() == 0; }
    int degree() const;

    int evaluate(uint64_t x) const {
        int v = 0;
        for (uint64_t m : monos_) v ^= int((x & m) == m);
        return v;
    }

    bool operator==(const AnfPolynomial& o) const {
        return n_ == o.n_ && monos_ == o.monos_;
    }

    // ANF text format (see parse_anf).
    std::string to_text() const;

private:
    int n_ = 0;
    std::vector<uint64_t> monos_;
};

// ANF text format: one monomial per line; a monomial is whitespace-separated
// decimal variable indices; the bare line "1" is the constant term; blank
// lines and '#' comments are ignored; the function is the XOR of all lines.
// Duplicate indices inside a monomial are idempotent, so "1 1" spells the
// single-variable monomial x1 unambiguously.
//
// n_vars == nullopt infers the variable count as max index + 1 (0 for an
// empty function). line_base offsets reported line numbers when the text is
// embedded in a larger file.
AnfPolynomial parse_anf(const std::string& text, std::optional<int> n_vars = std::nullopt,
                        int line_base = 0);

} // namespace cb6
