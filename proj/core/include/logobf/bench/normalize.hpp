#pragma once

#include <string>
#include <string_view>

namespace logobf::bench {

/// Answer normalization for exact match: NFC, Unicode case folding, every
/// punctuation character (Unicode punctuation plus all ASCII punctuation and
/// symbols) replaced by a space, whitespace runs collapsed, trimmed.
/// "Sister-in-law" -> "sister in law". Idempotent.
std::string normalize(std::string_view utf8);

}  // namespace logobf::bench
