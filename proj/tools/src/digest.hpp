#pragma once

#include <string>
#include <string_view>

namespace newton_strata::cli {

/// Lower-case hex SHA-256 of the bytes of `text`.
std::string sha256_hex(std::string_view text);

}  // namespace newton_strata::cli
