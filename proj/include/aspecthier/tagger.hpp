#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aspecthier/discourse.hpp"

namespace aspecthier {

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open byte range into the source text
};

// Whitespace tokenizer. Leading and trailing ASCII punctuation of each run
// becomes its own single-character token; internal punctuation (don't,
// wall-mount) stays attached. Bytes >= 0x80 count as word characters, so
// UTF-8 sequences are never split.
std::vector<TokenSpan> tokenize_spans(std::string_view text);
std::vector<std::string> tokenize(std::string_view text);

// Deterministic rule tagger: lexicon lookup on the lowercased surface, then
// suffix rules (-ness/-ment/-er -> NOUN, -ly -> OTHER), then OTHER.
// Pure punctuation tokens are tagged PUNCT before the lexicon is consulted.
class Tagger {
 public:
  using Lexicon = std::map<std::string, PosTag>;

  Tagger();  // built-in lexicon
  explicit Tagger(Lexicon lexicon);

  // TSV, one `surface<TAB>TAG` per line; blank lines ignored.
  static Tagger from_tsv(const std::string& path);
  static const Lexicon& default_lexicon();

  PosTag tag_word(std::string_view surface) const;

  // Throws std::invalid_argument on blank input.
  std::vector<Token> tag(std::string_view text) const;

 private:
  Lexicon lexicon_;
};

}  // namespace aspecthier
