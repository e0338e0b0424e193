#pragma once

#include <optional>
#include <ostream>
#include <string_view>

#include "lexdual/monomial.hpp"

namespace lexdual::cli {

enum exit_code : int { ok = 0, domain_failure = 1, usage = 2, verification_failure = 3 };

// Accepts `2,1,0,3,0,2` (n from the length) or `a^2*b*d^3*f^2`, which needs
// `n_hint`. Throws lexdual::error(parse_error) naming the offending position.
Monomial parse_monomial(std::string_view text, std::optional<std::size_t> n_hint);

// Full command line, argv[0] included. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexdual::cli
