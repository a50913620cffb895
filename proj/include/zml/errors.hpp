#ifndef ZML_ERRORS_HPP
#define ZML_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zml {

// Every failure raised by the library derives from zml::error so callers can
// catch one type; the subclasses exist so the CLI can map them to exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public error {
public:
    using error::error;
};

class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

class capacity_error : public error {
public:
    using error::error;
};

class range_error : public error {
public:
    using error::error;
};

class numeric_error : public error {
public:
    using error::error;
};

class coverage_error : public error {
public:
    using error::error;
};

class empty_range_error : public error {
public:
    using error::error;
};

class missing_zero_error : public numeric_error {
public:
    missing_zero_error(const std::string& what, long long gram_lo, long long gram_hi)
        : numeric_error(what), gram_lo_(gram_lo), gram_hi_(gram_hi) {}

    long long gram_lo() const noexcept { return gram_lo_; }
    long long gram_hi() const noexcept { return gram_hi_; }

private:
    long long gram_lo_;
    long long gram_hi_;
};

class malformed_file_error : public error {
public:
    using error::error;
};

class checksum_error : public malformed_file_error {
public:
    using malformed_file_error::malformed_file_error;
};

class classification_disabled_error : public error {
public:
    using error::error;
};

} // namespace zml

#endif // ZML_ERRORS_HPP
