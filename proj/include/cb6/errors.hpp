#pragma once

#include <stdexcept>
#include <string>

namespace cb6 {

// Error classes; the numeric value is the CLI exit code for that class.
enum class errc {
    parse = 2,
    validation = 3,
    capacity = 4,
    miss = 5,
    verification = 6,
    infeasible = 7,
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

struct parse_error : error {
    explicit parse_error(const std::string& m) : error(errc::parse, m) {}
};
struct validation_error : error {
    explicit validation_error(const std::string& m) : error(errc::validation, m) {}
};
struct capacity_error : error {
    explicit capacity_error(const std::string& m) : error(errc::capacity, m) {}
};
struct miss_error : error {
    explicit miss_error(const std::string& m) : error(errc::miss, m) {}
};
struct verification_error : error {
    explicit verification_error(const std::string& m) : error(errc::verification, m) {}
};
struct infeasible_error : error {
    explicit infeasible_error(const std::string& m) : error(errc::infeasible, m) {}
};

} // namespace cb6
