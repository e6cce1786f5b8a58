#include "balancegate/lfsr.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "balancegate/errors.hpp"

namespace balancegate {

namespace {

std::uint64_t low_bits(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Exponent lists for x^L + ... + 1, one primitive polynomial per degree.
const std::vector<std::vector<unsigned>>& primitive_table() {
  static const std::vector<std::vector<unsigned>> table = {
      {2, 1, 0},          {3, 2, 0},           {4, 3, 0},           {5, 3, 0},
      {6, 5, 0},          {7, 6, 0},           {8, 6, 5, 4, 0},     {9, 5, 0},
      {10, 7, 0},         {11, 9, 0},          {12, 11, 10, 4, 0},  {13, 12, 11, 8, 0},
      {14, 13, 12, 2, 0}, {15, 14, 0},         {16, 15, 13, 4, 0},
  };
  return table;
}

}  // namespace

ConnectionPolynomial::ConnectionPolynomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)) {
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
  if (exponents_.empty() || exponents_.back() != 0)
    throw ValidationError("connection polynomial must have a constant term");
  if (std::adjacent_find(exponents_.begin(), exponents_.end()) != exponents_.end())
    throw ValidationError("connection polynomial has a repeated exponent");
  if (exponents_.front() == 0) throw ValidationError("connection polynomial must have degree >= 1");
}

ConnectionPolynomial ConnectionPolynomial::reciprocal() const {
  std::vector<unsigned> r;
  for (unsigned e : exponents_) r.push_back(degree() - e);
  return ConnectionPolynomial(std::move(r));
}

std::string ConnectionPolynomial::to_string() const {
  std::string s;
  for (unsigned e : exponents_) {
    if (!s.empty()) s += " + ";
    if (e == 0)
      s += "1";
    else if (e == 1)
      s += "x";
    else
      s += "x^" + std::to_string(e);
  }
  return s;
}

LfsrConfig::LfsrConfig(std::size_t length, ConnectionPolynomial polynomial,
                       std::uint64_t initial_state)
    : length_(length), polynomial_(std::move(polynomial)), initial_state_(initial_state) {
  if (length_ == 0 || length_ > kMaxLfsrLength)
    throw ValidationError("LFSR length must be in [1, 64], got " + std::to_string(length_));
  if (polynomial_.degree() != length_)
    throw ValidationError("connection polynomial " + polynomial_.to_string() + " has degree " +
                          std::to_string(polynomial_.degree()) + ", register length is " +
                          std::to_string(length_));
  if (initial_state_ == 0) throw ValidationError("initial state must be nonzero");
  if ((initial_state_ & ~low_bits(length_)) != 0)
    throw ValidationError("initial state wider than the register");
  for (unsigned e : polynomial_.exponents())
    if (e != 0) taps_ |= std::uint64_t{1} << (length_ - e);
}

LfsrConfig::LfsrConfig(std::size_t length, ConnectionPolynomial polynomial)
    : LfsrConfig(length, std::move(polynomial), low_bits(length)) {}

std::uint64_t parse_state(std::string_view stage0_first, std::size_t length) {
  if (stage0_first.size() != length)
    throw ValidationError("state '" + std::string(stage0_first) + "' must have " +
                          std::to_string(length) + " bits");
  if (length > kMaxLfsrLength) throw ValidationError("state longer than 64 stages");
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < length; ++k) {
    const char c = stage0_first[k];
    if (c != '0' && c != '1') throw ValidationError("state must contain only 0 and 1");
    if (c == '1') s |= std::uint64_t{1} << k;
  }
  return s;
}

std::string format_state(std::uint64_t state, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t k = 0; k < length; ++k)
    if ((state >> k) & 1U) s[k] = '1';
  return s;
}

namespace {

inline std::uint64_t advance(std::uint64_t state, std::uint64_t taps, std::size_t length) {
  const std::uint64_t feedback = std::popcount(state & taps) & 1U;
  return (state >> 1) | (feedback << (length - 1));
}

}  // namespace

StepResult lfsr_step(std::uint64_t state, const LfsrConfig& config) {
  if (state == 0) throw ValidationError("LFSR state must be nonzero");
  if ((state & ~low_bits(config.length())) != 0) throw ValidationError("state wider than the register");
  return {static_cast<bool>(state & 1U), advance(state, config.tap_mask(), config.length())};
}

MaxLengthCheck verify_maximum_length(const LfsrConfig& config, std::size_t bound) {
  if (config.length() > bound) return MaxLengthCheck::kUnverifiable;
  const std::uint64_t start = low_bits(config.length());
  const std::uint64_t full = low_bits(config.length());  // 2^L - 1
  std::uint64_t state = start;
  std::uint64_t steps = 0;
  do {
    state = advance(state, config.tap_mask(), config.length());
    ++steps;
  } while (state != start && steps <= full);
  return steps == full && state == start ? MaxLengthCheck::kMaximal : MaxLengthCheck::kNotMaximal;
}

ConnectionPolynomial primitive_polynomial(unsigned degree) {
  if (degree < kMinTableDegree || degree > kMaxTableDegree)
    throw ValidationError("no built-in primitive polynomial of degree " + std::to_string(degree));
  return ConnectionPolynomial(primitive_table()[degree - kMinTableDegree]);
}

std::vector<ConnectionPolynomial> primitive_polynomials(unsigned degree) {
  auto p = primitive_polynomial(degree);
  auto r = p.reciprocal();
  if (r == p) return {p};
  return {p, r};
}

GeneratorInstance::GeneratorInstance(AnfFunction function, std::vector<LfsrConfig> lfsrs)
    : function_(std::move(function)), lfsrs_(std::move(lfsrs)) {
  const auto& regs = function_.layout().registers();
  if (regs.size() != lfsrs_.size())
    throw ValidationError("need one LFSR per register: " + std::to_string(regs.size()) +
                          " registers, " + std::to_string(lfsrs_.size()) + " LFSRs");
  for (std::size_t i = 0; i < regs.size(); ++i)
    if (regs[i].length != lfsrs_[i].length())
      throw ValidationError(std::string("LFSR for register '") + regs[i].name +
                            "' has the wrong length");
}

namespace {

// Term masks flattened to words for fast evaluation on packed joint states.
class PackedFunction {
 public:
  explicit PackedFunction(const AnfFunction& f)
      : words_((f.layout().total_length() + 63) / 64) {
    for (const auto& t : f.terms())
      for (auto w : t.words()) terms_.push_back(w);
  }

  std::size_t words() const { return words_; }

  bool operator()(const std::uint64_t* state) const {
    bool out = false;
    if (words_ == 1) {
      const std::uint64_t s = state[0];
      for (auto t : terms_) out ^= (s & t) == t;
      return out;
    }
    for (std::size_t i = 0; i < terms_.size(); i += words_) {
      bool inside = true;
      for (std::size_t w = 0; w < words_ && inside; ++w)
        inside = (state[w] & terms_[i + w]) == terms_[i + w];
      out ^= inside;
    }
    return out;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> terms_;
};

void deposit(std::vector<std::uint64_t>& words, std::size_t offset, std::uint64_t value) {
  const std::size_t w = offset / 64;
  const std::size_t shift = offset % 64;
  words[w] |= value << shift;
  if (shift != 0 && w + 1 < words.size()) words[w + 1] |= value >> (64 - shift);
}

// Clocks all registers `steps` times, calling sink(bit) with each output.
template <typename Sink>
void run(const GeneratorInstance& g, std::uint64_t steps, Sink&& sink) {
  const PackedFunction f(g.function());
  const auto& regs = g.layout().registers();
  std::vector<std::uint64_t> states;
  for (const auto& l : g.lfsrs()) states.push_back(l.initial_state());
  std::vector<std::uint64_t> joint(std::max<std::size_t>(f.words(), 1));
  const auto& lfsrs = g.lfsrs();
  for (std::uint64_t t = 0; t < steps; ++t) {
    std::fill(joint.begin(), joint.end(), 0);
    for (std::size_t r = 0; r < regs.size(); ++r) deposit(joint, regs[r].offset, states[r]);
    sink(f(joint.data()));
    for (std::size_t r = 0; r < regs.size(); ++r)
      states[r] = advance(states[r], lfsrs[r].tap_mask(), lfsrs[r].length());
  }
}

}  // namespace

BitSequence generate_output(const GeneratorInstance& g, std::uint64_t steps) {
  BitSequence out;
  out.reserve(steps);
  run(g, steps, [&](bool b) { out.push_back(b ? 1 : 0); });
  return out;
}

std::uint64_t require_simulatable(const GeneratorInstance& g, const SimulationOptions& options) {
  const BigInt period = g.layout().period();
  if (period > options.max_period)
    throw ResourceError("period " + period.str() + " exceeds the simulation budget of " +
                        std::to_string(options.max_period) + " steps");
  for (std::size_t r = 0; r < g.lfsrs().size(); ++r) {
    const auto& l = g.lfsrs()[r];
    const std::string name(1, g.layout().registers()[r].name);
    switch (verify_maximum_length(l, options.verify_bound)) {
      case MaxLengthCheck::kMaximal:
        break;
      case MaxLengthCheck::kNotMaximal:
        throw ValidationError("polynomial " + l.polynomial().to_string() + " of register '" +
                              name + "' is not maximum-length");
      case MaxLengthCheck::kUnverifiable:
        if (!options.trust_polynomials)
          throw ValidationError("register '" + name + "' is longer than the verification bound (" +
                                std::to_string(options.verify_bound) +
                                "); trust the polynomial explicitly to simulate");
        break;
    }
  }
  return period.convert_to<std::uint64_t>();
}

OnesCount count_ones_simulated(const GeneratorInstance& g, const SimulationOptions& options) {
  const std::uint64_t period = require_simulatable(g, options);
  std::uint64_t ones = 0;
  run(g, period, [&](bool b) { ones += b; });
  return ones;
}

OnesCount count_ones_truthtable(const AnfFunction& f, std::size_t max_total_length) {
  const auto& layout = f.layout();
  if (layout.total_length() > max_total_length || layout.total_length() > 64)
    throw ResourceError("truth-table count limited to " + std::to_string(max_total_length) +
                        " variables, layout has " + std::to_string(layout.total_length()));
  if (f.empty()) return 0;
  const PackedFunction eval(f);
  const auto& regs = layout.registers();
  std::uint64_t ones = 0;
  // Odometer over registers, each segment running through its nonzero states.
  auto recurse = [&](auto&& self, std::size_t r, std::uint64_t joint) -> void {
    const std::uint64_t top = low_bits(regs[r].length);
    if (r + 1 == regs.size()) {
      for (std::uint64_t v = 1; v <= top; ++v) {
        const std::uint64_t s = joint | (v << regs[r].offset);
        ones += eval(&s);
      }
      return;
    }
    for (std::uint64_t v = 1; v <= top; ++v) self(self, r + 1, joint | (v << regs[r].offset));
  };
  recurse(recurse, 0, 0);
  return ones;
}

MonobitStatistic monobit_statistic(const BitSequence& bits) {
  if (bits.empty()) throw ValidationError("monobit statistic of an empty sequence");
  std::uint64_t ones = 0;
  for (auto b : bits) ones += b != 0;
  return {ones, Rational(BigInt(ones), BigInt(bits.size()))};
}

std::string format_dump(const BitSequence& bits) {
  std::string out;
  out.reserve(bits.size() + bits.size() / 64 + 1);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    out.push_back(bits[i] ? '1' : '0');
    if ((i + 1) % 64 == 0) out.push_back('\n');
  }
  if (bits.size() % 64 != 0) out.push_back('\n');
  return out;
}

}  // namespace balancegate
