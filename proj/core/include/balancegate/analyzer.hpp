#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balancegate/anf.hpp"
#include "balancegate/minterm_engine.hpp"
#include "balancegate/numeric.hpp"

namespace balancegate {

/// Accept iff |ones - T/2| <= relative_tolerance * T.
struct VerdictPolicy {
  Rational relative_tolerance{1, 100};

  /// Throws ValidationError unless 0 <= tolerance <= 1/2.
  void validate() const;
};

enum class Verdict { kAccept, kReject };

std::string to_string(Verdict v);

enum class Severity { kGuarantee, kWarning };

std::string to_string(Severity s);

struct RuleFinding {
  std::string rule_id;
  Severity severity;
  std::string message;
  std::vector<std::string> evidence;  // variables or terms of F

  friend bool operator==(const RuleFinding&, const RuleFinding&) = default;
};

namespace rules {
inline constexpr const char* kIsolatedLinear = "ISOLATED_LINEAR_VARIABLE";
inline constexpr const char* kAllLinearTerms = "ALL_LINEAR_TERMS";
inline constexpr const char* kCommonFactor = "COMMON_FACTOR";
}  // namespace rules

struct HEntry {
  std::string mask;  // grouped bit string
  BigInt coefficient;

  friend bool operator==(const HEntry&, const HEntry&) = default;
};

struct AnalysisReport {
  std::string function;
  std::vector<std::pair<char, std::size_t>> registers;
  BigInt period;
  BigInt ones;
  BigInt zeros;
  Rational deviation;  // |ones - T/2| / T
  Rational tolerance;
  Verdict verdict;
  std::string magnitude_label;
  std::vector<RuleFinding> findings;
  std::vector<HEntry> final_h;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  VerdictPolicy policy;
  AccumulateOptions accumulate;
};

/// Exact ones count and verdict for F over its layout. Multi-register
/// layouts must have pairwise-coprime lengths.
AnalysisReport analyze(const AnfFunction& f, const AnalyzeOptions& options = {});

/// |ones - period/2| / period.
Rational deviation(const BigInt& ones, const BigInt& period);

Verdict verdict(const BigInt& ones, const BigInt& period, const VerdictPolicy& policy);

/// Nearest of 0, T/4, T/2, 3T/4, T within 5% of T; "irregular" otherwise.
std::string magnitude_label(const BigInt& ones, const BigInt& period);

/// Finds a linear term m_j whose variable occurs in no other term. On a
/// single register this guarantees ones = 2^{L-1}; on several registers it
/// is only reported as a warning.
std::optional<RuleFinding> check_proposition1(const AnfFunction& f);

/// Structural warnings: every register present as a standalone linear term
/// next to higher-order terms, or a variable shared by every term.
std::vector<RuleFinding> heuristic_findings(const AnfFunction& f);

/// check_proposition1 followed by heuristic_findings.
std::vector<RuleFinding> all_findings(const AnfFunction& f);

}  // namespace balancegate
