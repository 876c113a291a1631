#pragma once

// Simhash baseline: 64-bit fingerprints built by sign-thresholding per-bit
// sums of word hashes, compared by Hamming distance.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "refsig/detail/md5.hpp"
#include "refsig/error.hpp"

namespace refsig {

using fingerprint64_t = std::uint64_t;

inline constexpr int kFingerprintBits = 64;

// First 8 bytes of the word's MD5 digest, read big-endian. Pinned this way
// so fingerprints are bit-exact across platforms and runs.
inline fingerprint64_t word_hash64(std::string_view word) {
  if (word.empty()) throw validation_error("word_hash64: empty word");
  detail::md5_digest_t d = detail::md5(word);
  fingerprint64_t h = 0;
  for (int i = 0; i < 8; ++i) h = h << 8 | d[i];
  return h;
}

// Per-occurrence simhash over a word list: each bit column sums +1 for a set
// bit and -1 for a clear bit across all word hashes; the output bit is 1 iff
// the column sum is > 0 (ties give 0). An empty word list yields the
// degenerate all-zero fingerprint.
inline fingerprint64_t simhash(const std::vector<std::string>& words) {
  std::int32_t column[kFingerprintBits] = {0};
  for (const std::string& w : words) {
    fingerprint64_t h = word_hash64(w);
    for (int j = 0; j < kFingerprintBits; ++j) column[j] += (h >> j & 1u) ? 1 : -1;
  }
  fingerprint64_t out = 0;
  for (int j = 0; j < kFingerprintBits; ++j)
    if (column[j] > 0) out |= fingerprint64_t{1} << j;
  return out;
}

inline int hamming(fingerprint64_t a, fingerprint64_t b) { return std::popcount(a ^ b); }

// Linear map of Hamming distance onto [0, 1]: 1 - hd/64.
inline double simhash_similarity(fingerprint64_t a, fingerprint64_t b) {
  return 1.0 - static_cast<double>(hamming(a, b)) / kFingerprintBits;
}

// 16 lowercase hex digits; the CLI serialization of a fingerprint.
inline std::string fingerprint_hex(fingerprint64_t fp) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[fp & 0xf];
    fp >>= 4;
  }
  return out;
}

}  // namespace refsig
