#ifndef HADWIGER_ERRORS_HPP
#define HADWIGER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hadwiger {

/// An exact search was asked to run on a graph larger than its cap.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(const std::string& what, std::size_t cap, std::size_t requested)
        : std::runtime_error(what + ": " + std::to_string(requested) + " vertices exceeds cap "
                             + std::to_string(cap))
        , cap_(cap)
        , requested_(requested)
    {
    }
    std::size_t cap() const noexcept { return cap_; }
    std::size_t requested() const noexcept { return requested_; }

private:
    std::size_t cap_;
    std::size_t requested_;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg)
        , line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace hadwiger

#endif // HADWIGER_ERRORS_HPP
