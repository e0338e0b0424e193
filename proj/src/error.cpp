#include "lexdual/error.hpp"

namespace lexdual {

const char* to_string(errc code) noexcept {
    switch (code) {
    case errc::invalid_input: return "invalid input";
    case errc::undefined_on_unit: return "undefined on the unit monomial";
    case errc::no_predecessor: return "no predecessor";
    case errc::invalid_rep: return "invalid Macaulay representation";
    case errc::unsupported: return "unsupported";
    case errc::resource_limit: return "resource limit exceeded";
    case errc::parse_error: return "parse error";
    case errc::internal: return "internal consistency error";
    }
    return "unknown error";
}

}  // namespace lexdual
