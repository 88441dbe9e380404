#pragma once

#include <string>

#include "nctrace/word.hpp"

namespace nctrace {

/// Parses the word grammar: comma-separated factors, each `u`, `u^<p>`, with
/// an optional trailing `*`. Whitespace around factors is ignored. Throws
/// std::invalid_argument on any deviation (empty word, bad power, stray
/// characters).
TraceWord parse_word(const std::string& text);

}  // namespace nctrace
