#pragma once

#include <cstddef>

namespace gqt::detail {

// Remembers the first (key, value) seen and the first later key whose value
// differs. Feeding keys in increasing order per chunk and merging chunks in
// order gives the globally first discrepancy, whatever the chunking.
template <typename Key>
struct FirstDiff {
  bool has = false;
  Key first_key{};
  std::size_t first_val = 0;
  bool has_diff = false;
  Key diff_key{};
  std::size_t diff_val = 0;

  void see(const Key& key, std::size_t val) {
    if (!has) {
      has = true;
      first_key = key;
      first_val = val;
    } else if (!has_diff && val != first_val) {
      has_diff = true;
      diff_key = key;
      diff_val = val;
    }
  }

  void merge_later(const FirstDiff& later) {
    if (!later.has || has_diff) return;
    if (!has) {
      *this = later;
      return;
    }
    if (later.first_val != first_val) {
      has_diff = true;
      diff_key = later.first_key;
      diff_val = later.first_val;
    } else if (later.has_diff) {
      has_diff = true;
      diff_key = later.diff_key;
      diff_val = later.diff_val;
    }
  }
};

}  // namespace gqt::detail
