// Annotated and plain corpus parsing in the word/tag line format:
// one sentence per line, tokens separated by whitespace, each token
// word<SEP>tag split at the rightmost separator (default "/").
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mrpos::corpus {

struct Token {
  std::string word;
  std::string tag;
  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  int index = 0;  // ordinal among non-blank lines, zero-based
  bool operator==(const Sentence&) const = default;
};

struct AnnotatedCorpus {
  std::vector<Sentence> sentences;
  std::int64_t word_count = 0;
  bool operator==(const AnnotatedCorpus&) const = default;
};

struct CorpusConfig {
  char tag_separator = '/';
  // Throws std::invalid_argument unless the separator is a single printable
  // non-whitespace ASCII character.
  void validate() const;
};

// One Sentence per non-blank line; tokens split on Unicode whitespace runs;
// each token split at the rightmost tag separator ("3/4/CD" -> word "3/4",
// tag "CD"). Throws MalformedToken on separator-less tokens or empty halves.
AnnotatedCorpus parse_annotated(std::string_view text, const CorpusConfig& config = {});

// Non-blank lines paired with their zero-based non-blank ordinal, whitespace
// trimmed at the line ends.
std::vector<std::pair<int, std::string>> parse_plain(std::string_view text);

// Inverse of parse_annotated up to consecutive renumbering of indexes.
std::string write_annotated(const AnnotatedCorpus& corpus, const CorpusConfig& config = {});

std::string write_sentence(const Sentence& sentence, const CorpusConfig& config = {});

// Splits a line on Unicode whitespace runs.
std::vector<std::string> split_words(std::string_view line);

}  // namespace mrpos::corpus
