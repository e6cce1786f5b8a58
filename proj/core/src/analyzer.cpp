#include "balancegate/analyzer.hpp"

#include <array>

#include "balancegate/errors.hpp"

namespace balancegate {

void VerdictPolicy::validate() const {
  if (relative_tolerance < 0 || relative_tolerance > Rational(1, 2))
    throw ValidationError("tolerance must lie in [0, 1/2], got " +
                          to_fraction_string(relative_tolerance));
}

std::string to_string(Verdict v) { return v == Verdict::kAccept ? "accept" : "reject"; }

std::string to_string(Severity s) { return s == Severity::kGuarantee ? "guarantee" : "warning"; }

Rational deviation(const BigInt& ones, const BigInt& period) {
  if (period <= 0) throw ValidationError("period must be positive");
  const BigInt twice = 2 * ones - period;
  return Rational(twice < 0 ? BigInt(-twice) : twice, 2 * period);
}

Verdict verdict(const BigInt& ones, const BigInt& period, const VerdictPolicy& policy) {
  return deviation(ones, period) <= policy.relative_tolerance ? Verdict::kAccept
                                                              : Verdict::kReject;
}

std::string magnitude_label(const BigInt& ones, const BigInt& period) {
  static const std::array<const char*, 5> labels = {"≈ 0", "≈ T/4", "≈ T/2", "≈ T/2 + T/4",
                                                    "≈ T"};
  // Compare 4*ones against k*T to stay in integers; the window is T/20.
  const BigInt scaled = 4 * ones;
  std::optional<std::size_t> best;
  BigInt best_distance;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    BigInt d = scaled - BigInt(k) * period;
    if (d < 0) d = -d;
    if (20 * d > 4 * period) continue;
    if (!best || d < best_distance) {
      best = k;
      best_distance = d;
    }
  }
  return best ? labels[*best] : "irregular";
}

std::optional<RuleFinding> check_proposition1(const AnfFunction& f) {
  const auto& layout = f.layout();
  for (const auto& term : f.terms()) {
    if (term.popcount() != 1) continue;
    bool isolated = true;
    for (const auto& other : f.terms()) {
      if (&other == &term) continue;
      if (!(other & term).none()) {
        isolated = false;
        break;
      }
    }
    if (!isolated) continue;
    const std::string var = layout.variable_name(term.set_bits().front());
    if (layout.is_single()) {
      const std::size_t L = layout.total_length();
      return RuleFinding{rules::kIsolatedLinear, Severity::kGuarantee,
                         "linear term " + var +
                             " occurs in no other term: the output is balanced with exactly 2^" +
                             std::to_string(L - 1) + " = " + pow2(L - 1).str() + " ones",
                         {var}};
    }
    return RuleFinding{rules::kIsolatedLinear, Severity::kWarning,
                       "linear term " + var +
                           " occurs in no other term; on several registers this suggests, but "
                           "does not guarantee, a near-balanced output",
                       {var}};
  }
  return std::nullopt;
}

std::vector<RuleFinding> heuristic_findings(const AnfFunction& f) {
  std::vector<RuleFinding> out;
  if (f.empty()) return out;
  const auto& layout = f.layout();

  if (!layout.is_single()) {
    bool has_higher_order = false;
    std::vector<std::string> linear_per_register(layout.size());
    for (const auto& t : f.terms()) {
      if (t.popcount() > 1) {
        has_higher_order = true;
        continue;
      }
      const std::size_t bit = t.set_bits().front();
      auto& slot = linear_per_register[layout.register_of(bit)];
      if (slot.empty()) slot = layout.variable_name(bit);
    }
    bool all_registers = true;
    for (const auto& v : linear_per_register) all_registers = all_registers && !v.empty();
    if (has_higher_order && all_registers) {
      std::string list;
      for (const auto& v : linear_per_register) list += (list.empty() ? "" : ", ") + v;
      out.push_back({rules::kAllLinearTerms, Severity::kWarning,
                     "every register appears as a standalone linear term (" + list +
                         ") alongside higher-order terms; expect noticeably more than T/2 ones",
                     linear_per_register});
    }
  }

  MintermMask common = f.terms().front();
  for (const auto& t : f.terms()) common = common & t;
  const bool single_linear = f.size() == 1 && f.terms().front().popcount() == 1;
  if (!single_linear) {
    for (std::size_t bit : common.set_bits()) {
      const std::string var = layout.variable_name(bit);
      out.push_back({rules::kCommonFactor, Severity::kWarning,
                     var + " occurs in every term, so the output is 1 only when " + var +
                         " is 1; expect noticeably fewer than T/2 ones",
                     {var}});
    }
  }
  return out;
}

std::vector<RuleFinding> all_findings(const AnfFunction& f) {
  std::vector<RuleFinding> out;
  if (auto p = check_proposition1(f)) out.push_back(std::move(*p));
  for (auto& h : heuristic_findings(f)) out.push_back(std::move(h));
  return out;
}

AnalysisReport analyze(const AnfFunction& f, const AnalyzeOptions& options) {
  options.policy.validate();
  const auto& layout = f.layout();

  AnalysisReport report;
  report.function = to_string(f);
  for (const auto& reg : layout.registers()) report.registers.emplace_back(reg.name, reg.length);
  report.period = layout.period();

  const SignedMintermSum h = accumulate(phi(f), layout.total_length(), options.accumulate);
  report.ones = ones_from_H(h, layout);
  report.zeros = report.period - report.ones;
  report.findings = all_findings(f);

  for (const auto& finding : report.findings) {
    if (finding.severity == Severity::kGuarantee &&
        report.ones != pow2(layout.total_length() - 1))
      throw InternalError("isolated linear term guarantees 2^(L-1) ones but the count is " +
                          report.ones.str());
  }

  report.tolerance = options.policy.relative_tolerance;
  report.deviation = deviation(report.ones, report.period);
  report.verdict = verdict(report.ones, report.period, options.policy);
  report.magnitude_label = magnitude_label(report.ones, report.period);
  for (auto it = h.end(); it != h.begin();) {
    --it;
    report.final_h.push_back({layout.render(it->first), it->second});
  }
  return report;
}

}  // namespace balancegate
