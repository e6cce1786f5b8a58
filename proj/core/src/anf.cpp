#include "balancegate/anf.hpp"

#include <algorithm>
#include <cctype>

#include "balancegate/errors.hpp"

namespace balancegate {

AnfFunction::AnfFunction(RegisterLayout layout) : layout_(std::move(layout)) {}

AnfFunction::AnfFunction(RegisterLayout layout, const std::vector<MintermMask>& terms)
    : layout_(std::move(layout)) {
  for (const auto& t : terms) toggle(t);
}

AnfFunction AnfFunction::from_distinct_terms(RegisterLayout layout,
                                             std::vector<MintermMask> terms) {
  AnfFunction f(std::move(layout));
  for (const auto& t : terms) {
    if (t.width() != f.layout_.total_length())
      throw ValidationError("term width does not match layout length");
    if (t.none()) throw ValidationError("constant term is not supported");
  }
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("duplicate term");
  f.terms_ = std::move(terms);
  return f;
}

bool AnfFunction::contains(const MintermMask& term) const {
  return std::find(terms_.begin(), terms_.end(), term) != terms_.end();
}

void AnfFunction::toggle(const MintermMask& term) {
  if (term.width() != layout_.total_length())
    throw ValidationError("term width " + std::to_string(term.width()) +
                          " does not match layout length " +
                          std::to_string(layout_.total_length()));
  if (term.none()) throw ValidationError("constant term is not supported");
  if (auto it = std::find(terms_.begin(), terms_.end(), term); it != terms_.end())
    terms_.erase(it);
  else
    terms_.push_back(term);
}

AnfFunction AnfFunction::operator^(const AnfFunction& other) const {
  if (!(layout_ == other.layout_)) throw ValidationError("cannot combine functions over different layouts");
  AnfFunction r = *this;
  for (const auto& t : other.terms_) r.toggle(t);
  return r;
}

bool operator==(const AnfFunction& a, const AnfFunction& b) {
  if (!(a.layout_ == b.layout_) || a.terms_.size() != b.terms_.size()) return false;
  auto x = a.terms_;
  auto y = b.terms_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RegisterLayout& layout) : text_(text), layout_(layout) {}

  AnfFunction run() {
    AnfFunction f(layout_);
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    for (;;) {
      f.toggle(monomial());
      skip_space();
      if (at_end()) break;
      if (peek() != '^' && peek() != '+')
        throw ParseError(std::string("expected '^' or '+', found '") + peek() + "'", pos_);
      ++pos_;
    }
    return f;
  }

 private:
  MintermMask monomial() {
    MintermMask term(layout_.total_length());
    for (;;) {
      term.set(variable());
      skip_space();
      if (at_end() || peek() != '*') return term;
      ++pos_;
    }
  }

  std::size_t variable() {
    skip_space();
    if (at_end()) throw ParseError("expected a variable, found end of input", pos_);
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const auto digits = text_.substr(start, pos_ - start);
      if (digits == "0" || digits == "1")
        throw ParseError("constant term '" + std::string(digits) + "' is not supported", start);
      throw ParseError("malformed token '" + std::string(digits) + "'", start);
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    ++pos_;
    const std::size_t reg = resolve(c, start);
    const std::size_t digits_start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits_start) throw ParseError(std::string("variable '") + c + "' has no index", start);
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("malformed token; join variables with '*'", pos_);
    const auto digits = text_.substr(digits_start, pos_ - digits_start);
    const auto& r = layout_.registers()[reg];
    if (digits.size() > 9 || std::stoul(std::string(digits)) >= r.length)
      throw ParseError(std::string("index ") + std::string(digits) + " out of range for register '" +
                           r.name + "' of length " + std::to_string(r.length),
                       digits_start);
    return r.offset + std::stoul(std::string(digits));
  }

  std::size_t resolve(char letter, std::size_t at) const {
    if (auto idx = layout_.find(letter)) return *idx;
    if (layout_.is_single() && letter == 'm') return 0;
    throw ParseError(std::string("unknown register '") + letter + "'", at);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  const RegisterLayout& layout_;
  std::size_t pos_ = 0;
};

}  // namespace

AnfFunction parse_function(std::string_view text, const RegisterLayout& layout) {
  return Parser(text, layout).run();
}

bool evaluate(const AnfFunction& f, const Assignment& x) {
  if (x.size() != f.layout().total_length())
    throw ValidationError("assignment has " + std::to_string(x.size()) + " values, layout needs " +
                          std::to_string(f.layout().total_length()));
  bool out = false;
  for (const auto& t : f.terms()) out ^= t.is_subset_of(x.ones());
  return out;
}

std::string term_to_string(const MintermMask& term, const RegisterLayout& layout) {
  std::string s;
  for (const auto& reg : layout.registers()) {
    for (std::size_t k = reg.length; k-- > 0;) {
      if (!term.test(reg.offset + k)) continue;
      if (!s.empty()) s += '*';
      s += reg.name;
      s += std::to_string(k);
    }
  }
  return s;
}

std::string to_string(const AnfFunction& f) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " ^ ";
    s += term_to_string(t, f.layout());
  }
  return s;
}

}  // namespace balancegate
