#pragma once

#include <string>
#include <string_view>

#include "hlx/text.hpp"

namespace hlx {

// One pass of the Porter suffix-stripping algorithm (original 1980 rule
// set). Input is expected lowercase; tokens that are not pure a-z (numbers,
// punctuation, contractions) are returned unchanged, as are words of fewer
// than three letters.
std::string porter_stem(std::string_view word);

// Stems every token. Porter is applied to fixpoint (a single pass is not
// idempotent: decision -> decis -> deci), so the result satisfies
// stem(stem(t)) == stem(t) for every token.
TokenSequence stem_tokens(const TokenSequence& seq);

}  // namespace hlx
