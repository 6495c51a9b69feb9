#include "mrpos/corpus.hpp"

#include <cctype>
#include <stdexcept>

#include "mrpos/error.hpp"

namespace mrpos::corpus {

namespace {

bool is_space_codepoint(std::uint32_t cp) {
  switch (cp) {
    case 0x09: case 0x0a: case 0x0b: case 0x0c: case 0x0d: case 0x20:
    case 0x85: case 0xa0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202f: case 0x205f: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200a;
  }
}

// Decodes the UTF-8 sequence starting at i; malformed bytes are treated as
// single Latin-1 characters so parsing never fails on binary junk.
std::uint32_t next_codepoint(std::string_view s, size_t& i) {
  unsigned char b0 = s[i];
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  std::uint32_t cp = 0;
  if ((b0 & 0xe0) == 0xc0) { len = 2; cp = b0 & 0x1f; }
  else if ((b0 & 0xf0) == 0xe0) { len = 3; cp = b0 & 0x0f; }
  else if ((b0 & 0xf8) == 0xf0) { len = 4; cp = b0 & 0x07; }
  else { ++i; return b0; }
  if (i + len > s.size()) { ++i; return b0; }
  for (int k = 1; k < len; ++k) {
    unsigned char bk = s[i + k];
    if ((bk & 0xc0) != 0x80) { ++i; return b0; }
    cp = (cp << 6) | (bk & 0x3f);
  }
  i += len;
  return cp;
}

struct Span {
  size_t begin;  // byte offset in line
  size_t end;
};

std::vector<Span> word_spans(std::string_view line) {
  std::vector<Span> spans;
  size_t i = 0;
  while (i < line.size()) {
    size_t start = i;
    std::uint32_t cp = next_codepoint(line, i);
    if (is_space_codepoint(cp)) continue;
    size_t end = i;
    while (i < line.size()) {
      size_t probe = i;
      cp = next_codepoint(line, probe);
      if (is_space_codepoint(cp)) break;
      i = probe;
      end = i;
    }
    spans.push_back({start, end});
  }
  return spans;
}

// Line ends only: leading and trailing whitespace, interior untouched.
std::string_view trim(std::string_view line) {
  auto spans = word_spans(line);
  if (spans.empty()) return {};
  return line.substr(spans.front().begin, spans.back().end - spans.front().begin);
}

Token split_token(std::string_view tok, char sep, int line_no, int column) {
  size_t pos = tok.rfind(sep);
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == tok.size())
    throw MalformedToken(line_no, column, std::string(tok));
  return Token{std::string(tok.substr(0, pos)), std::string(tok.substr(pos + 1))};
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
  size_t start = 0;
  int line_no = 1;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    size_t len = nl == std::string_view::npos ? text.size() - start : nl - start;
    fn(text.substr(start, len), line_no);
    ++line_no;
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

}  // namespace

void CorpusConfig::validate() const {
  unsigned char c = static_cast<unsigned char>(tag_separator);
  if (c > 0x7e || !std::isgraph(c))
    throw std::invalid_argument("tag separator must be a printable non-whitespace ASCII character");
}

AnnotatedCorpus parse_annotated(std::string_view text, const CorpusConfig& config) {
  config.validate();
  AnnotatedCorpus corpus;
  for_each_line(text, [&](std::string_view line, int line_no) {
    auto spans = word_spans(line);
    if (spans.empty()) return;  // blank lines are skipped, not represented
    Sentence sentence;
    sentence.index = static_cast<int>(corpus.sentences.size());
    sentence.tokens.reserve(spans.size());
    for (const Span& sp : spans) {
      std::string_view tok = line.substr(sp.begin, sp.end - sp.begin);
      sentence.tokens.push_back(
          split_token(tok, config.tag_separator, line_no, static_cast<int>(sp.begin) + 1));
    }
    corpus.word_count += static_cast<std::int64_t>(sentence.tokens.size());
    corpus.sentences.push_back(std::move(sentence));
  });
  return corpus;
}

std::vector<std::pair<int, std::string>> parse_plain(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  for_each_line(text, [&](std::string_view line, int) {
    std::string_view t = trim(line);
    if (t.empty()) return;
    lines.emplace_back(static_cast<int>(lines.size()), std::string(t));
  });
  return lines;
}

std::string write_sentence(const Sentence& sentence, const CorpusConfig& config) {
  std::string out;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += sentence.tokens[i].word;
    out.push_back(config.tag_separator);
    out += sentence.tokens[i].tag;
  }
  return out;
}

std::string write_annotated(const AnnotatedCorpus& corpus, const CorpusConfig& config) {
  config.validate();
  std::string out;
  for (const Sentence& s : corpus.sentences) {
    out += write_sentence(s, config);
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  for (const Span& sp : word_spans(line)) words.emplace_back(line.substr(sp.begin, sp.end - sp.begin));
  return words;
}

}  // namespace mrpos::corpus
