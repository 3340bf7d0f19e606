#include "symtc/parse.hpp"

#include <cctype>
#include <climits>

namespace symtc {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Space parse() {
    Space out = space();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > INT_MAX) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(v);
  }

  // Wraps descriptor validation so range errors carry a position too.
  template <class F>
  Space checked(std::size_t at, F make) {
    try {
      return make();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  }

  Space space() {
    const std::size_t at = (skip(), pos_);
    std::vector<Space> factors{term()};
    while (peek('x')) {
      ++pos_;
      factors.push_back(term());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return checked(at, [&] { return Space::product(std::move(factors)); });
  }

  Space term() {
    Space s = atom();
    while (peek('^')) {
      ++pos_;
      const std::size_t k_at = (skip(), pos_);
      const int k = integer();
      s = checked(k_at, [&] { return Space::power(std::move(s), k); });
    }
    return s;
  }

  Surface surface(char kind) {
    expect('(');
    const std::size_t at = (skip(), pos_);
    const int g = integer();
    expect(')');
    if (kind == 'N' && g < 1) throw ParseError("non-orientable genus must be at least 1", at);
    return {kind == 'M' ? SurfaceKind::Orientable : SurfaceKind::NonOrientable, g};
  }

  Space atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      Space inner = space();
      expect(')');
      return inner;
    }
    if (s_.compare(pos_, 2, "SP") == 0) {
      pos_ += 2;
      expect('(');
      const std::size_t n_at = (skip(), pos_);
      const int n = integer();
      expect(',');
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != 'M' && s_[pos_] != 'N')) fail("expected M(g) or N(g)");
      const char kind = s_[pos_++];
      const Surface surf = surface(kind);
      expect(')');
      return checked(n_at, [&] { return Space::symmetric_product(n, surf); });
    }
    const char c = s_[pos_];
    if (c == 'S') {
      ++pos_;
      expect('(');
      const std::size_t k_at = (skip(), pos_);
      const int k = integer();
      expect(')');
      return checked(k_at, [&] { return Space::sphere(k); });
    }
    if (c == 'M' || c == 'N') {
      ++pos_;
      const Surface surf = surface(c);
      return checked(at, [&] { return Space::surface(surf); });
    }
    fail("expected S(k), SP(n, M(g)|N(g)), M(g), N(g) or '('");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Space parse_space(const std::string& text) { return Parser(text).parse(); }

}  // namespace symtc
