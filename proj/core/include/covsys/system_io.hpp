#pragma once

#include <string>
#include <string_view>

#include "covsys/congruence.hpp"

namespace covsys {

/// Reads the `.cov` text format:
///
///   # comment
///   q 2
///   1 mod x
///   x mod x^2
///
/// The header must be the first non-blank line; q must be prime. Each
/// following line is `<residue> mod <modulus>`. `#` starts a comment
/// anywhere on a line. LF and CRLF are accepted. Throws ParseError.
CongruenceSystem parse_system(std::string_view text);

/// Writes the `.cov` format with LF line endings. Prime fields only.
std::string format_system(const CongruenceSystem& system);

}  // namespace covsys
