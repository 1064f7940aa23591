#include <cctype>
#include <charconv>

#include "garside/cli.hpp"

namespace garside::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<int> parse_all() {
    std::vector<int> out = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  std::vector<int> parse_sequence() {
    std::vector<int> out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      if (text_[pos_] == '(') {
        ++pos_;
        std::vector<int> inner = parse_sequence();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
        int m = 1;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_space();
          m = parse_int();
        }
        append_power(out, inner, m);
      } else {
        const int letter = parse_int();
        if (letter == 0) fail("generator 0 does not exist");
        out.push_back(letter);
      }
    }
  }

  static void append_power(std::vector<int>& out, const std::vector<int>& w, int m) {
    std::vector<int> base = w;
    if (m < 0) {
      base.assign(w.rbegin(), w.rend());
      for (int& l : base) l = -l;
      m = -m;
    }
    for (int i = 0; i < m; ++i) out.insert(out.end(), base.begin(), base.end());
  }

  int parse_int() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected an integer at offset " + std::to_string(pos_));
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw UsageError("bad word \"" + std::string(text_) + "\": " + what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<int> expand_word(std::string_view text) { return Parser(text).parse_all(); }

BraidWord parse_word(int n, std::string_view text) { return BraidWord(n, expand_word(text)); }

}  // namespace garside::cli
