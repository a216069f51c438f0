#include "logobf/bench/normalize.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "logobf/common/error.hpp"

namespace logobf::bench {

namespace {

bool is_punct(UChar32 c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
           (c >= 0x7B && c <= 0x7E);
  }
  return u_ispunct(c) != 0;
}

}  // namespace

std::string normalize(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");

  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString folded = nfc->normalize(text, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  folded.foldCase();
  // Folding can denormalize (e.g. expanding ligatures); renormalize.
  folded = nfc->normalize(folded, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");

  icu::UnicodeString out;
  bool pending_space = false;
  for (int32_t i = 0; i < folded.length();) {
    const UChar32 c = folded.char32At(i);
    i += U16_LENGTH(c);
    if (is_punct(c) || u_isUWhiteSpace(c) || c == 0x09 || c == 0x0A || c == 0x0D) {
      pending_space = !out.isEmpty();
      continue;
    }
    if (pending_space) out.append(static_cast<UChar>(0x20));
    pending_space = false;
    out.append(c);
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

}  // namespace logobf::bench
