#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "balancegate/anf.hpp"
#include "balancegate/layout.hpp"
#include "balancegate/numeric.hpp"

namespace balancegate {

/// Connection polynomial P(x) over GF(2), held as its nonzero exponents in
/// descending order. [3, 2, 0] is x^3 + x^2 + 1.
class ConnectionPolynomial {
 public:
  /// Throws ValidationError unless 0 is present and the exponents are
  /// distinct.
  explicit ConnectionPolynomial(std::vector<unsigned> exponents);

  unsigned degree() const noexcept { return exponents_.front(); }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  /// x^L P(1/x).
  ConnectionPolynomial reciprocal() const;

  std::string to_string() const;

  friend bool operator==(const ConnectionPolynomial&, const ConnectionPolynomial&) = default;

 private:
  std::vector<unsigned> exponents_;
};

inline constexpr std::size_t kMaxLfsrLength = 64;

/// Fibonacci LFSR: stage 0 is output, stages shift down, and the new
/// stage L-1 is the XOR of stages k for which the reciprocal polynomial has
/// a nonzero coefficient at degree k < L.
///
/// State bit k holds stage k.
class LfsrConfig {
 public:
  /// Throws ValidationError if the degree differs from `length`, the length
  /// is outside [1, 64], or the state is zero or too wide.
  LfsrConfig(std::size_t length, ConnectionPolynomial polynomial, std::uint64_t initial_state);

  /// Seed defaults to all stages 1.
  LfsrConfig(std::size_t length, ConnectionPolynomial polynomial);

  std::size_t length() const noexcept { return length_; }
  const ConnectionPolynomial& polynomial() const noexcept { return polynomial_; }
  std::uint64_t initial_state() const noexcept { return initial_state_; }
  std::uint64_t tap_mask() const noexcept { return taps_; }

 private:
  std::size_t length_;
  ConnectionPolynomial polynomial_;
  std::uint64_t taps_ = 0;
  std::uint64_t initial_state_;
};

/// Parses a stage-0-first state string ("110" = stage0 1, stage1 1, stage2 0).
std::uint64_t parse_state(std::string_view stage0_first, std::size_t length);
std::string format_state(std::uint64_t state, std::size_t length);

struct StepResult {
  bool output;
  std::uint64_t next_state;
};

/// Throws ValidationError on a zero state.
StepResult lfsr_step(std::uint64_t state, const LfsrConfig& config);

enum class MaxLengthCheck { kMaximal, kNotMaximal, kUnverifiable };

inline constexpr std::size_t kDefaultVerifyBound = 24;

/// Walks the state cycle from the all-ones state. Lengths above `bound`
/// report kUnverifiable without stepping.
MaxLengthCheck verify_maximum_length(const LfsrConfig& config,
                                     std::size_t bound = kDefaultVerifyBound);

/// Built-in primitive polynomial of the given degree (2..16). Throws
/// ValidationError outside the table.
ConnectionPolynomial primitive_polynomial(unsigned degree);

/// Distinct known primitive polynomials of a degree: the table entry and its
/// reciprocal when they differ.
std::vector<ConnectionPolynomial> primitive_polynomials(unsigned degree);

inline constexpr unsigned kMinTableDegree = 2;
inline constexpr unsigned kMaxTableDegree = 16;

/// Registers clocked together feeding one Boolean function.
class GeneratorInstance {
 public:
  /// One LfsrConfig per register, matching lengths, in layout order.
  GeneratorInstance(AnfFunction function, std::vector<LfsrConfig> lfsrs);

  const RegisterLayout& layout() const noexcept { return function_.layout(); }
  const AnfFunction& function() const noexcept { return function_; }
  const std::vector<LfsrConfig>& lfsrs() const noexcept { return lfsrs_; }

 private:
  AnfFunction function_;
  std::vector<LfsrConfig> lfsrs_;
};

using BitSequence = std::vector<std::uint8_t>;

/// Output bit t is F applied to the joint state after t clocks.
BitSequence generate_output(const GeneratorInstance& g, std::uint64_t steps);

inline constexpr std::uint64_t kDefaultMaxPeriod = std::uint64_t{1} << 31;

struct SimulationOptions {
  std::uint64_t max_period = kDefaultMaxPeriod;
  std::size_t verify_bound = kDefaultVerifyBound;
  /// Accept polynomials longer than verify_bound without checking.
  bool trust_polynomials = false;
};

/// Throws unless the layout is coprime, T fits the budget (ResourceError)
/// and every register is maximum-length (verified, or trusted above the
/// bound). Returns T.
std::uint64_t require_simulatable(const GeneratorInstance& g, const SimulationOptions& options);

/// Generates exactly T bits and counts the ones. Requires coprime lengths
/// and maximum-length registers (verified, or trusted above the bound).
OnesCount count_ones_simulated(const GeneratorInstance& g, const SimulationOptions& options = {});

inline constexpr std::size_t kDefaultTruthTableLength = 28;

/// Counts joint assignments, each register segment nonzero, where f is 1.
OnesCount count_ones_truthtable(const AnfFunction& f,
                                std::size_t max_total_length = kDefaultTruthTableLength);

struct MonobitStatistic {
  std::uint64_t ones;
  Rational proportion;
};

/// Throws ValidationError on an empty sequence.
MonobitStatistic monobit_statistic(const BitSequence& bits);

/// '0'/'1' per bit, newline after every 64 bits and at the end (if nonempty).
std::string format_dump(const BitSequence& bits);

}  // namespace balancegate
