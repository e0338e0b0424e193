#pragma once

#include <stdexcept>
#include <string>

namespace lexdual {

enum class errc {
    invalid_input,
    undefined_on_unit,
    no_predecessor,
    invalid_rep,
    unsupported,
    resource_limit,
    parse_error,
    internal
};

const char* to_string(errc code) noexcept;

// Every recoverable failure in the library is reported through this type.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace lexdual
