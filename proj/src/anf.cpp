#include "cb6/anf.hpp"

#include <algorithm>
#include <sstream>

#include "cb6/errors.hpp"

namespace cb6 {

namespace {

// XOR-reduce: monomials appearing an even number of times cancel.
std::vector<uint64_t> reduce(std::vector<uint64_t> monos) {
    std::sort(monos.begin(), monos.end());
    std::vector<uint64_t> out;
    size_t i = 0;
    while (i < monos.size()) {
        size_t j = i;
        while (j < monos.size() && monos[j] == monos[i]) ++j;
        if ((j - i) & 1) out.push_back(monos[i]);
        i = j;
    }
    return out;
}

} // namespace

AnfPolynomial::AnfPolynomial(int n_vars, std::vector<uint64_t> monomials) : n_(n_vars) {
    if (n_vars < 0 || n_vars > 64)
        throw validation_error("ANF variable count out of range: " + std::to_string(n_vars));
    uint64_t allowed = n_vars == 64 ? ~uint64_t(0) : (uint64_t(1) << n_vars) - 1;
    for (uint64_t m : monomials)
        if (m & ~allowed)
            throw validation_error("ANF monomial uses a variable index >= " +
                                   std::to_string(n_vars));
    monos_ = reduce(std::move(monomials));
}

int AnfPolynomial::degree() const {
    int d = 0;
    for (uint64_t m : monos_) d = std::max(d, __builtin_popcountll(m));
    return d;
}

std::string AnfPolynomial::to_text() const {
    std::ostringstream out;
    for (uint64_t m : monos_) {
        if (m == 0) {
            out << "1\n";
            continue;
        }
        bool first = true;
        for (int i = 0; i < 64; ++i)
            if (m >> i & 1) {
                if (!first) out << ' ';
                out << i;
                first = false;
            }
        // a bare "1" is reserved for the constant term; x1 alone is "1 1"
        if (m == 2) out << " 1";
        out << '\n';
    }
    return out.str();
}

AnfPolynomial parse_anf(const std::string& text, std::optional<int> n_vars, int line_base) {
    std::istringstream in(text);
    std::string line;
    std::vector<uint64_t> monos;
    int max_index = -1;
    int lineno = line_base;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream toks(line);
        std::vector<std::string> fields;
        for (std::string t; toks >> t;) fields.push_back(t);
        if (fields.empty()) continue;
        if (fields.size() == 1 && fields[0] == "1") {
            monos.push_back(0); // constant term
            continue;
        }
        uint64_t mask = 0;
        for (const auto& t : fields) {
            size_t used = 0;
            unsigned long idx = 0;
            try {
                idx = std::stoul(t, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != t.size())
                throw parse_error("line " + std::to_string(lineno) +
                                  ": bad variable index '" + t + "'");
            if (idx >= 64)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": variable index " + t + " out of range");
            if (n_vars && idx >= uint64_t(*n_vars))
                throw parse_error("line " + std::to_string(lineno) + ": variable index " +
                                  t + " >= " + std::to_string(*n_vars));
            max_index = std::max(max_index, int(idx));
            mask |= uint64_t(1) << idx;
        }
        monos.push_back(mask);
    }
    int n = n_vars ? *n_vars : max_index + 1;
    return AnfPolynomial(n, std::move(monos));
}

} // namespace cb6
