#pragma once

// Character 3-gram primitives: text normalization, gram/word extraction and
// exact cosine similarity over sparse count vectors. Everything here is a
// pure function over immutable values and safe to call from any thread.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "refsig/error.hpp"

namespace refsig {

inline constexpr std::size_t kGramLen = 3;
inline constexpr std::uint32_t kGramSpace = 26u * 26u * 26u;  // 17576

// Dense index of a 3-gram over the a-z alphabet: "aaa" -> 0, "zzz" -> 17575.
// The order is lexicographic.
using gram_id_t = std::uint32_t;

inline bool is_gram(std::string_view s) {
  if (s.size() != kGramLen) return false;
  for (char c : s)
    if (c < 'a' || c > 'z') return false;
  return true;
}

inline gram_id_t pack_gram(std::string_view gram) {
  if (!is_gram(gram)) throw validation_error("not a 3-gram: \"" + std::string(gram) + "\"");
  return (static_cast<gram_id_t>(gram[0] - 'a') * 26 + static_cast<gram_id_t>(gram[1] - 'a')) * 26 +
         static_cast<gram_id_t>(gram[2] - 'a');
}

inline std::string unpack_gram(gram_id_t id) {
  assert(id < kGramSpace);
  std::string s(kGramLen, 'a');
  s[2] = static_cast<char>('a' + id % 26);
  s[1] = static_cast<char>('a' + (id / 26) % 26);
  s[0] = static_cast<char>('a' + id / (26 * 26));
  return s;
}

struct GramCount {
  gram_id_t gram;
  std::uint32_t count;

  friend bool operator==(const GramCount&, const GramCount&) = default;
};

// Sparse 3-gram occurrence vector. Entries are sorted by gram id and counts
// are >= 1; the euclidean norm is cached at construction.
class NgramVector {
 public:
  NgramVector() = default;

  // Entries may arrive unsorted with repeated gram ids; duplicates merge.
  static NgramVector from_entries(std::vector<GramCount> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const GramCount& x, const GramCount& y) { return x.gram < y.gram; });
    std::vector<GramCount> merged;
    merged.reserve(entries.size());
    for (const GramCount& e : entries) {
      if (e.count == 0) continue;
      if (!merged.empty() && merged.back().gram == e.gram)
        merged.back().count += e.count;
      else
        merged.push_back(e);
    }
    return NgramVector(std::move(merged));
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<GramCount>& entries() const { return entries_; }
  double norm() const { return norm_; }

  std::uint32_t count(std::string_view gram) const {
    gram_id_t id = pack_gram(gram);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                               [](const GramCount& e, gram_id_t g) { return e.gram < g; });
    return (it != entries_.end() && it->gram == id) ? it->count : 0;
  }

  std::uint64_t total_occurrences() const {
    std::uint64_t total = 0;
    for (const GramCount& e : entries_) total += e.count;
    return total;
  }

  friend bool operator==(const NgramVector& a, const NgramVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  explicit NgramVector(std::vector<GramCount> sorted) : entries_(std::move(sorted)) {
    double sq = 0.0;
    for (const GramCount& e : entries_) sq += static_cast<double>(e.count) * e.count;
    norm_ = std::sqrt(sq);
  }

  friend NgramVector extract_3grams(std::string_view);

  std::vector<GramCount> entries_;
  double norm_ = 0.0;
};

// Lowercases and collapses every maximal run of non-letter characters into a
// single space, trimming the ends. Idempotent; empty input stays empty.
inline std::string normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (unsigned char c : raw) {
    if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(static_cast<char>(c));
    } else {
      pending_space = true;
    }
  }
  return out;
}

// Maximal letter runs of normalized text, in document order, duplicates kept.
inline std::vector<std::string> extract_words(std::string_view normalized) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < normalized.size()) {
    if (normalized[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < normalized.size() && normalized[i] != ' ') ++i;
    words.emplace_back(normalized.substr(start, i - start));
  }
  return words;
}

// Sliding-window 3-grams within each space-delimited token; grams never span
// a space. Tokens shorter than 3 letters contribute nothing.
inline NgramVector extract_3grams(std::string_view normalized) {
  std::vector<gram_id_t> ids;
  std::size_t i = 0;
  while (i < normalized.size()) {
    if (normalized[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < normalized.size() && normalized[i] != ' ') ++i;
    for (std::size_t w = start; w + kGramLen <= i; ++w) {
      gram_id_t id = 0;
      for (std::size_t k = 0; k < kGramLen; ++k) {
        char c = normalized[w + k];
        assert(c >= 'a' && c <= 'z');
        id = id * 26 + static_cast<gram_id_t>(c - 'a');
      }
      ids.push_back(id);
    }
  }

  std::sort(ids.begin(), ids.end());
  std::vector<GramCount> entries;
  entries.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size();) {
    std::size_t run = k;
    while (run < ids.size() && ids[run] == ids[k]) ++run;
    entries.push_back({ids[k], static_cast<std::uint32_t>(run - k)});
    k = run;
  }
  return NgramVector(std::move(entries));
}

// Exact cosine similarity (Eq. 1 shape: dot / (|a| * |b|)). Empty vectors
// compare as 0. The result is clamped to 1 to absorb rounding overshoot.
inline double cosine(const NgramVector& a, const NgramVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].gram == eb[j].gram) {
      dot += static_cast<double>(ea[i].count) * eb[j].count;
      ++i;
      ++j;
    } else if (ea[i].gram < eb[j].gram) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::min(1.0, dot / (a.norm() * b.norm()));
}

}  // namespace refsig
