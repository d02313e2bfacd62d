#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cb6/anf.hpp"
#include "cb6/bitvec.hpp"

namespace cb6 {

// State fits one machine word.
inline constexpr int kMaxRegisterBits = 63;
// period() refuses longer registers unless the caller overrides the guard.
inline constexpr int kMaxPeriodBits = 34;

// Fibonacci-configuration NLFSR. Output is cell x0; cells shift down one
// place per step; the feedback bit enters at x_{L-1}.
struct RegisterSpec {
    std::string name;
    int length = 0;
    AnfPolynomial feedback; // n_vars == length, no constant term

    bool is_linear() const { return feedback.degree() <= 1; }
};

// Bit i of the word is cell x_i.
using RegisterState = uint64_t;

struct StepResult {
    int output;
    RegisterState next;
};

// Parses ANF text into a register spec. Rejects out-of-range indices and a
// constant term (the all-zero state must stay a fixed point).
RegisterSpec parse_register(const std::string& anf_text, int length, std::string name = "");

void validate_state(const RegisterSpec& spec, RegisterState s);

StepResult step(const RegisterSpec& spec, RegisterState s);
BitVec run(const RegisterSpec& spec, RegisterState s, uint64_t n);

// Precompiled single-state stepper. Linear taps fold into one parity mask;
// when the distinct taps fit a small index, feedback is served from a
// lookup table over the compressed tap bits.
class Stepper {
public:
    explicit Stepper(const RegisterSpec& spec, bool allow_table = true);

    int length() const { return length_; }

    int feedback(RegisterState s) const {
        if (!table_.empty()) return table_[compress(s)];
        int v = __builtin_parityll(s & linear_mask_);
        for (uint64_t m : nonlinear_) v ^= int((s & m) == m);
        return v;
    }

    RegisterState next(RegisterState s) const {
        return (s >> 1) | (RegisterState(feedback(s)) << (length_ - 1));
    }

    static int output(RegisterState s) { return int(s & 1); }

private:
    uint64_t compress(RegisterState s) const;

    int length_ = 0;
    uint64_t linear_mask_ = 0;
    std::vector<uint64_t> nonlinear_;
    uint64_t tap_mask_ = 0;
    std::vector<int> tap_positions_;
    std::vector<uint8_t> table_; // feedback bit per compressed tap value
};

// 64 independent states stepped in lockstep: one word per cell, bit j of
// cell word i = cell x_i of lane j. Cells are addressed through a rotating
// head so a step never moves words.
class BitslicedRegister {
public:
    BitslicedRegister(const RegisterSpec& spec, const std::vector<RegisterState>& lanes);

    int lane_count() const { return lanes_; }

    // Advances every lane one step; returns the output word (bit j = lane j's output).
    uint64_t step();

private:
    uint64_t& cell(int i) { return cells_[(head_ + i) % length_]; }

    int length_ = 0;
    int lanes_ = 0;
    int head_ = 0;
    uint64_t linear_ones_ = 0; // parity fold has no word-level shortcut; keep masks
    std::vector<uint64_t> cells_;
    std::vector<std::vector<int>> monomial_taps_;
};

// Smallest t > 0 with state(t) == start. Throws for an all-zero start, for
// lengths above guard_bits, and if the trajectory re-enters a cycle that
// does not contain the start (possible for singular feedbacks).
uint64_t period(const RegisterSpec& spec, RegisterState start, int guard_bits = kMaxPeriodBits);

// Exhaustive check that the nonzero states form a single cycle of length
// 2^L - 1. Only for small L.
bool verify_max_period_exhaustive(const RegisterSpec& spec);

// Randomized search for maximum-period toy NLFSRs, verified exhaustively.
// Each requested length must be in [6, 16]. Deterministic under the seed.
std::vector<RegisterSpec> find_toy_max_period_specs(const std::vector<int>& lengths,
                                                    uint64_t budget = 200000,
                                                    uint64_t seed = 1);

// Exact primitivity test for the characteristic polynomial of a linear
// feedback (x^L + sum_{tap i} x^i). Primitive <=> period 2^L - 1 from every
// nonzero state. Factorizes 2^L - 1 by trial division, so L <= 40 or so.
bool is_primitive_linear_feedback(const RegisterSpec& spec);

// Deterministic search for a primitive-LFSR register of the given length:
// tries trinomials x^L + x^k + 1 in ascending k, then pentanomials.
RegisterSpec find_primitive_lfsr(int length, std::string name = "");

// Register parameter file: blocks of "register <name> <length>" followed by
// ANF lines for the feedback.
struct RegisterFile {
    std::vector<RegisterSpec> registers;
};

RegisterFile parse_register_file(std::istream& in, const std::string& source_name = "");
RegisterFile load_register_file(const std::string& path);
void save_register_file(const std::string& path, const RegisterFile& file,
                        const std::string& header_comment = "");
const RegisterSpec& find_register(const RegisterFile& file, const std::string& name);

} // namespace cb6
