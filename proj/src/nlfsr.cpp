#include "cb6/nlfsr.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "cb6/errors.hpp"

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace cb6 {

namespace {

// Compressed-tap feedback tables stay comfortably in cache up to here.
constexpr int kMaxTableTaps = 20;

void check_length(int length) {
    if (length < 1 || length > kMaxRegisterBits)
        throw validation_error("register length out of range: " + std::to_string(length));
}

} // namespace

RegisterSpec parse_register(const std::string& anf_text, int length, std::string name) {
    check_length(length);
    AnfPolynomial f = parse_anf(anf_text, length);
    if (f.has_constant_term())
        throw validation_error("register feedback has a constant term; the all-zero "
                               "state would not be a fixed point");
    return RegisterSpec{std::move(name), length, std::move(f)};
}

void validate_state(const RegisterSpec& spec, RegisterState s) {
    if (spec.length < 64 && (s >> spec.length) != 0)
        throw validation_error("state is wider than register '" + spec.name + "' (" +
                               std::to_string(spec.length) + " bits)");
}

StepResult step(const RegisterSpec& spec, RegisterState s) {
    validate_state(spec, s);
    Stepper st(spec, /*allow_table=*/false);
    return StepResult{Stepper::output(s), st.next(s)};
}

BitVec run(const RegisterSpec& spec, RegisterState s, uint64_t n) {
    validate_state(spec, s);
    Stepper st(spec);
    BitVec out(size_t(n));
    for (uint64_t t = 0; t < n; ++t) {
        out.set(size_t(t), Stepper::output(s));
        s = st.next(s);
    }
    return out;
}

Stepper::Stepper(const RegisterSpec& spec, bool allow_table) : length_(spec.length) {
    check_length(spec.length);
    for (uint64_t m : spec.feedback.monomials()) {
        if (__builtin_popcountll(m) == 1)
            linear_mask_ ^= m; // taps appearing twice cancel (already reduced, defensive)
        else
            nonlinear_.push_back(m);
        tap_mask_ |= m;
    }
    int taps = __builtin_popcountll(tap_mask_);
    if (allow_table && taps > 0 && taps <= kMaxTableTaps) {
        for (int i = 0; i < 64; ++i)
            if (tap_mask_ >> i & 1) tap_positions_.push_back(i);
        table_.resize(size_t(1) << taps);
        for (uint64_t v = 0; v < table_.size(); ++v) {
            uint64_t s = 0;
            for (size_t k = 0; k < tap_positions_.size(); ++k)
                if (v >> k & 1) s |= uint64_t(1) << tap_positions_[k];
            int fb = __builtin_parityll(s & linear_mask_);
            for (uint64_t m : nonlinear_) fb ^= int((s & m) == m);
            table_[v] = uint8_t(fb);
        }
    }
}

uint64_t Stepper::compress(RegisterState s) const {
#if defined(__BMI2__)
    return _pext_u64(s, tap_mask_);
#else
    uint64_t v = 0;
    for (size_t k = 0; k < tap_positions_.size(); ++k)
        v |= ((s >> tap_positions_[k]) & 1) << k;
    return v;
#endif
}

BitslicedRegister::BitslicedRegister(const RegisterSpec& spec,
                                     const std::vector<RegisterState>& lanes)
    : length_(spec.length), lanes_(int(lanes.size())) {
    if (lanes.empty() || lanes.size() > 64)
        throw validation_error("bitsliced register takes 1..64 lanes");
    cells_.assign(size_t(length_), 0);
    for (size_t j = 0; j < lanes.size(); ++j) {
        validate_state(spec, lanes[j]);
        for (int i = 0; i < length_; ++i)
            if (lanes[j] >> i & 1) cells_[size_t(i)] |= uint64_t(1) << j;
    }
    for (uint64_t m : spec.feedback.monomials()) {
        std::vector<int> taps;
        for (int i = 0; i < length_; ++i)
            if (m >> i & 1) taps.push_back(i);
        monomial_taps_.push_back(std::move(taps));
    }
}

uint64_t BitslicedRegister::step() {
    uint64_t fb = 0;
    for (const auto& taps : monomial_taps_) {
        uint64_t w = ~uint64_t(0);
        for (int t : taps) w &= cell(t);
        fb ^= w;
    }
    uint64_t out = cells_[size_t(head_)];
    cells_[size_t(head_)] = fb;
    head_ = (head_ + 1) % length_;
    return out;
}

uint64_t period(const RegisterSpec& spec, RegisterState start, int guard_bits) {
    validate_state(spec, start);
    if (start == 0)
        throw validation_error("period is undefined from the all-zero state (fixed point)");
    if (spec.length > guard_bits)
        throw capacity_error("period: register length " + std::to_string(spec.length) +
                             " exceeds the " + std::to_string(guard_bits) +
                             "-bit iteration guard");
    Stepper st(spec);
    const uint64_t limit = uint64_t(1) << spec.length;
    RegisterState s = start;
    uint64_t t = 0;
    do {
        s = st.next(s);
        ++t;
    } while (s != start && t < limit);
    if (s != start)
        throw validation_error("trajectory from the given state never returns to it "
                               "(feedback is singular)");
    return t;
}

bool verify_max_period_exhaustive(const RegisterSpec& spec) {
    if (spec.length > 20)
        throw capacity_error("exhaustive period check limited to 20-bit registers");
    Stepper st(spec);
    const uint64_t want = (uint64_t(1) << spec.length) - 1;
    RegisterState s = 1;
    uint64_t t = 0;
    do {
        s = st.next(s);
        ++t;
    } while (s != 1 && t <= want);
    return t == want && s == 1;
}

namespace {

uint64_t rand_below(std::mt19937_64& rng, uint64_t n) {
    // n is tiny here; modulo bias is irrelevant but rejection keeps it exact
    uint64_t lim = ~uint64_t(0) - ~uint64_t(0) % n;
    uint64_t v;
    do {
        v = rng();
    } while (v >= lim);
    return v % n;
}

// Random nonsingular candidate: x0 xor g(x1..x_{L-1}), g without constant
// term and with at least one monomial of degree >= 2.
RegisterSpec random_toy_candidate(int length, std::mt19937_64& rng) {
    std::vector<uint64_t> monos{1}; // x0
    int extra = 2 + int(rand_below(rng, uint64_t(2 * length)));
    for (int k = 0; k < extra; ++k) {
        int deg = 1 + int(rand_below(rng, 3));
        uint64_t m = 0;
        for (int d = 0; d < deg; ++d) m |= uint64_t(1) << (1 + rand_below(rng, uint64_t(length - 1)));
        monos.push_back(m);
    }
    AnfPolynomial f(length, std::move(monos));
    bool nonlinear = false;
    for (uint64_t m : f.monomials()) nonlinear |= __builtin_popcountll(m) >= 2;
    if (!nonlinear || !(f.monomials().size() > 0 && f.monomials().front() == 1))
        return RegisterSpec{}; // x0 cancelled or purely linear; caller retries
    return RegisterSpec{"", length, std::move(f)};
}

} // namespace

std::vector<RegisterSpec> find_toy_max_period_specs(const std::vector<int>& lengths,
                                                    uint64_t budget, uint64_t seed) {
    std::vector<RegisterSpec> out;
    for (int length : lengths) {
        if (length < 6 || length > 16)
            throw capacity_error("toy register search supports lengths 6..16, got " +
                                 std::to_string(length));
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + uint64_t(length));
        bool found = false;
        for (uint64_t attempt = 0; attempt < budget; ++attempt) {
            RegisterSpec cand = random_toy_candidate(length, rng);
            if (cand.length == 0) continue;
            if (verify_max_period_exhaustive(cand)) {
                cand.name = "T" + std::to_string(length);
                out.push_back(std::move(cand));
                found = true;
                break;
            }
        }
        if (!found)
            throw capacity_error("toy register search exhausted its budget of " +
                                 std::to_string(budget) + " attempts for length " +
                                 std::to_string(length));
    }
    return out;
}

namespace {

// GF(2)[x] arithmetic with packed coefficients, for degrees up to ~60.
uint64_t polymod(unsigned __int128 a, uint64_t p, int deg) {
    for (int i = 2 * deg - 2; i >= deg; --i)
        if ((a >> i) & 1) a ^= unsigned __int128(p) << (i - deg);
    return uint64_t(a);
}

uint64_t polymulmod(uint64_t a, uint64_t b, uint64_t p, int deg) {
    unsigned __int128 acc = 0;
    while (b) {
        int i = __builtin_ctzll(b);
        acc ^= unsigned __int128(a) << i;
        b &= b - 1;
    }
    return polymod(acc, p, deg);
}

uint64_t polypowmod(uint64_t base, uint64_t e, uint64_t p, int deg) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = polymulmod(r, base, p, deg);
        base = polymulmod(base, base, p, deg);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ord(x) == 2^deg - 1 in GF(2)[x]/(p) forces the quotient to be a field with
// x primitive, so this single test decides primitivity.
bool poly_is_primitive(uint64_t p, int deg) {
    if (!(p & 1)) return false; // x divides p
    uint64_t order = (uint64_t(1) << deg) - 1;
    if (polypowmod(2, order, p, deg) != 1) return false;
    for (uint64_t q : prime_factors(order))
        if (polypowmod(2, order / q, p, deg) == 1) return false;
    return true;
}

RegisterSpec lfsr_from_poly(uint64_t p, int deg, std::string name) {
    std::vector<uint64_t> monos;
    for (int i = 0; i < deg; ++i)
        if (p >> i & 1) monos.push_back(uint64_t(1) << i);
    return RegisterSpec{std::move(name), deg, AnfPolynomial(deg, std::move(monos))};
}

} // namespace

bool is_primitive_linear_feedback(const RegisterSpec& spec) {
    if (!spec.is_linear() || spec.feedback.has_constant_term()) return false;
    if (spec.length > 40)
        throw capacity_error("primitivity check limited to 40-bit registers");
    uint64_t p = uint64_t(1) << spec.length; // x^L
    for (uint64_t m : spec.feedback.monomials()) p |= m;
    return poly_is_primitive(p, spec.length);
}

RegisterSpec find_primitive_lfsr(int length, std::string name) {
    if (length < 2 || length > 40)
        throw capacity_error("primitive LFSR search supports lengths 2..40");
    if (name.empty()) name = "S" + std::to_string(length);
    uint64_t top = uint64_t(1) << length;
    for (int k = 1; k < length; ++k) {
        uint64_t p = top | (uint64_t(1) << k) | 1;
        if (poly_is_primitive(p, length)) return lfsr_from_poly(p, length, name);
    }
    for (int a = 1; a < length; ++a)
        for (int b = a + 1; b < length; ++b)
            for (int c = b + 1; c < length; ++c) {
                uint64_t p = top | (uint64_t(1) << a) | (uint64_t(1) << b) |
                             (uint64_t(1) << c) | 1;
                if (poly_is_primitive(p, length)) return lfsr_from_poly(p, length, name);
            }
    throw capacity_error("no primitive tri/pentanomial found for length " +
                         std::to_string(length));
}

RegisterFile parse_register_file(std::istream& in, const std::string& source_name) {
    RegisterFile file;
    std::string line;
    int lineno = 0;
    std::string cur_name;
    int cur_length = 0;
    std::ostringstream cur_text;
    auto flush = [&]() {
        if (cur_name.empty()) return;
        RegisterSpec spec = parse_register(cur_text.str(), cur_length, cur_name);
        file.registers.push_back(std::move(spec));
        cur_name.clear();
        cur_text.str("");
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        if (auto pos = stripped.find('#'); pos != std::string::npos) stripped.erase(pos);
        std::istringstream toks(stripped);
        std::string first;
        if (!(toks >> first)) continue;
        if (first == "register") {
            flush();
            int length = 0;
            if (!(toks >> cur_name >> length) || length <= 0)
                throw parse_error(source_name + " line " + std::to_string(lineno) +
                                  ": expected 'register <name> <length>'");
            for (const auto& r : file.registers)
                if (r.name == cur_name)
                    throw parse_error(source_name + " line " + std::to_string(lineno) +
                                      ": duplicate register name '" + cur_name + "'");
            cur_length = length;
        } else {
            if (cur_name.empty())
                throw parse_error(source_name + " line " + std::to_string(lineno) +
                                  ": ANF line before any 'register' header");
            cur_text << stripped << '\n';
        }
    }
    flush();
    return file;
}

RegisterFile load_register_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open register file '" + path + "'");
    return parse_register_file(in, path);
}

void save_register_file(const std::string& path, const RegisterFile& file,
                        const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write register file '" + path + "'");
    if (!header_comment.empty()) out << "# " << header_comment << '\n';
    for (const auto& r : file.registers) {
        out << "register " << r.name << ' ' << r.length << '\n';
        out << r.feedback.to_text();
    }
}

const RegisterSpec& find_register(const RegisterFile& file, const std::string& name) {
    for (const auto& r : file.registers)
        if (r.name == name) return r;
    throw validation_error("register '" + name + "' not found in file");
}

} // namespace cb6
