#pragma once

#include <string>
#include <string_view>

namespace logobf::series {

/// Lowercase 32-hex MD5 digest of `bytes`.
std::string md5_hex(std::string_view bytes);

}  // namespace logobf::series
