#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace common2 {

// Everything a base object can hold is an opaque machine word. Item indexes
// start at 1 so that 0 can mean "no index written yet".
using Word = std::int64_t;

// Reserved "unset / empty" marker. Distinct from 0 and from every user item;
// user items and consensus proposals must never equal it.
inline constexpr Word kBottom = std::numeric_limits<Word>::min();

// Return marker of operations that succeed without a value (enq, write).
inline constexpr Word kOk = 0;

inline bool is_bottom(Word w) { return w == kBottom; }

// Renders a word for logs: the bottom marker prints as "_|_".
std::string word_str(Word w);

}  // namespace common2
