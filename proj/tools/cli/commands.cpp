#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "balancegate/analyzer.hpp"
#include "balancegate/errors.hpp"
#include "report_json.hpp"
#include "spec_file.hpp"

namespace balancegate::cli {

namespace {

constexpr std::size_t kMaxPrintedHEntries = 64;

std::string approx(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(6) << r.convert_to<double>();
  return s.str();
}

// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

AnalyzeOptions analyze_options(const SpecFile& spec, const CommandOptions& opts) {
  AnalyzeOptions a;
  if (opts.tolerance)
    a.policy.relative_tolerance = parse_rational(*opts.tolerance);
  else if (spec.tolerance)
    a.policy.relative_tolerance = *spec.tolerance;
  a.accumulate.max_entries = opts.max_h_entries;
  return a;
}

SimulationOptions simulation_options(const CommandOptions& opts) {
  SimulationOptions s;
  s.max_period = opts.max_period;
  s.trust_polynomials = opts.trust_poly;
  return s;
}

void print_finding(std::ostream& out, const RuleFinding& f) {
  out << "[" << to_string(f.severity) << "] " << f.rule_id << ": " << f.message << "\n";
}

}  // namespace

int cmd_analyze(const std::string& path, const CommandOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const SpecFile spec = load_spec(path);
    const AnalysisReport r = analyze(spec.parsed_function(), analyze_options(spec, opts));
    if (opts.json) {
      out << report_to_json(r).dump(2) << "\n";
    } else {
      out << "function:    " << r.function << "\n";
      out << "registers:  ";
      for (const auto& [name, length] : r.registers) out << " " << name << "(" << length << ")";
      out << "\n";
      out << "period T:    " << r.period << "\n";
      out << "ones:        " << r.ones << "\n";
      out << "zeros:       " << r.zeros << "\n";
      out << "deviation:   " << to_fraction_string(r.deviation) << " (~" << approx(r.deviation)
          << ")\n";
      out << "tolerance:   " << to_fraction_string(r.tolerance) << "\n";
      out << "magnitude:   " << r.magnitude_label << "\n";
      out << "verdict:     " << (r.verdict == Verdict::kAccept ? "ACCEPT" : "REJECT") << "\n";
      for (const auto& f : r.findings) print_finding(out, f);
      out << "H (" << r.final_h.size() << " entries):\n";
      for (std::size_t i = 0; i < r.final_h.size() && i < kMaxPrintedHEntries; ++i) {
        const auto& e = r.final_h[i];
        const BigInt mag = e.coefficient < 0 ? BigInt(-e.coefficient) : e.coefficient;
        out << "  " << (e.coefficient < 0 ? '-' : '+') << "[" << mag << "] " << e.mask << "\n";
      }
      if (r.final_h.size() > kMaxPrintedHEntries)
        out << "  ... (" << r.final_h.size() - kMaxPrintedHEntries << " more; use --json)\n";
    }
    return r.verdict == Verdict::kAccept ? kExitOk : kExitReject;
  });
}

int cmd_expand(const std::string& path, const CommandOptions& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const SpecFile spec = load_spec(path);
    const AnfFunction f = spec.parsed_function();
    const auto minterms = minterm_expansion_of_F(f);
    std::vector<std::string> rendered;
    for (auto it = minterms.rbegin(); it != minterms.rend(); ++it)
      rendered.push_back(f.layout().render(*it));
    if (opts.json) {
      out << nlohmann::json{{"minterms", rendered}, {"count", std::to_string(rendered.size())}}.dump(2)
          << "\n";
      return kExitOk;
    }
    for (std::size_t i = 0; i < rendered.size(); ++i) out << (i ? ", " : "") << rendered[i];
    if (!rendered.empty()) out << " ";
    out << "(" << rendered.size() << (rendered.size() == 1 ? " minterm)" : " minterms)") << "\n";
    return kExitOk;
  });
}

int cmd_simulate(const std::string& path, const CommandOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const SpecFile spec = load_spec(path);
    const auto resolved = resolve_lfsrs(spec);
    for (const auto& n : resolved.notices) err << "note: " << n << "\n";
    const GeneratorInstance g(spec.parsed_function(), resolved.lfsrs);

    const bool full = opts.full_period || !opts.steps;
    std::uint64_t steps = 0;
    if (full) {
      const BigInt period = g.layout().period();
      if (!opts.dump) {
        const OnesCount ones = count_ones_simulated(g, simulation_options(opts));
        if (opts.json) {
          out << nlohmann::json{{"steps", period.str()},
                                {"ones", ones.str()},
                                {"proportion", to_fraction_string(Rational(ones, period))}}
                     .dump(2)
              << "\n";
        } else {
          out << "steps:      " << period << " (full period)\n";
          out << "ones:       " << ones << "\n";
          out << "proportion: " << to_fraction_string(Rational(ones, period)) << " (~"
              << approx(Rational(ones, period)) << ")\n";
        }
        return kExitOk;
      }
      steps = require_simulatable(g, simulation_options(opts));
    } else {
      steps = *opts.steps;
      if (steps > opts.max_period)
        throw ResourceError(std::to_string(steps) + " steps exceed the simulation budget");
    }

    const BitSequence bits = generate_output(g, steps);
    std::uint64_t ones = 0;
    for (auto b : bits) ones += b;
    std::optional<MonobitStatistic> mono;
    if (!bits.empty()) mono = monobit_statistic(bits);
    if (opts.json) {
      nlohmann::json doc{{"steps", std::to_string(steps)}, {"ones", std::to_string(ones)}};
      doc["proportion"] = mono ? nlohmann::json(to_fraction_string(mono->proportion)) : nlohmann::json();
      if (opts.dump) {
        std::string seq;
        for (auto b : bits) seq.push_back(b ? '1' : '0');
        doc["sequence"] = seq;
      }
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    if (opts.dump) out << format_dump(bits);
    out << "steps:      " << steps << (full ? " (full period)" : "") << "\n";
    out << "ones:       " << ones << "\n";
    if (mono)
      out << "proportion: " << to_fraction_string(mono->proportion) << " (~" << approx(mono->proportion)
          << ")\n";
    else
      out << "proportion: n/a\n";
    return kExitOk;
  });
}

int cmd_verify(const std::string& path, const CommandOptions& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const SpecFile spec = load_spec(path);
    const AnfFunction f = spec.parsed_function();
    const BigInt period = f.layout().period();

    AnalyzeOptions aopts = analyze_options(spec, opts);
    const OnesCount symbolic = analyze(f, aopts).ones;

    std::vector<std::pair<std::string, std::optional<OnesCount>>> counts;
    std::vector<std::string> skipped;
    counts.emplace_back("symbolic", symbolic);

    if (f.layout().total_length() <= kDefaultTruthTableLength)
      counts.emplace_back("truth-table", count_ones_truthtable(f));
    else
      skipped.push_back("truth-table (layout longer than " +
                        std::to_string(kDefaultTruthTableLength) + " variables)");

    if (period > opts.max_period) {
      skipped.push_back("simulation (period exceeds budget of " + std::to_string(opts.max_period) +
                        " steps)");
    } else {
      std::optional<ResolvedLfsrs> resolved;
      try {
        resolved = resolve_lfsrs(spec);
      } catch (const ValidationError& e) {
        skipped.push_back(std::string("simulation (") + e.what() + ")");
      }
      if (resolved) {
        for (const auto& n : resolved->notices) err << "note: " << n << "\n";
        const GeneratorInstance g(f, resolved->lfsrs);
        counts.emplace_back("simulated", count_ones_simulated(g, simulation_options(opts)));
      }
    }

    if (counts.size() < 2) {
      for (const auto& s : skipped) err << "skipped: " << s << "\n";
      throw ResourceError("instance too large for any brute-force oracle");
    }

    bool agree = true;
    for (const auto& [_, c] : counts) agree = agree && *c == symbolic;

    if (opts.json) {
      nlohmann::json doc{{"period", period.str()}, {"agree", agree}, {"skipped", skipped}};
      for (const auto& [name, c] : counts) doc["counts"][name] = c->str();
      out << doc.dump(2) << "\n";
    } else {
      out << "period:      " << period << "\n";
      for (const auto& [name, c] : counts)
        out << std::left << std::setw(13) << (name + ":") << *c << "\n";
      for (const auto& s : skipped) out << "skipped:     " << s << "\n";
      out << (agree ? "PASS" : "FAIL") << "\n";
    }
    return agree ? kExitOk : kExitMismatch;
  });
}

int cmd_check_rules(const std::string& path, const CommandOptions& opts, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const SpecFile spec = load_spec(path);
    const auto findings = all_findings(spec.parsed_function());
    if (opts.json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& f : findings) arr.push_back(finding_to_json(f));
      out << arr.dump(2) << "\n";
      return kExitOk;
    }
    if (findings.empty()) out << "no findings\n";
    for (const auto& f : findings) print_finding(out, f);
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact balancedness analysis for LFSR-combinational generators", "balancegate"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string path;
  std::uint64_t steps = 0;
  std::string tolerance;

  using Command = int (*)(const std::string&, const CommandOptions&, std::ostream&, std::ostream&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const char* name, const char* help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("spec-file", path, "Generator spec (JSON)")->required();
    sub->add_flag("--json", opts.json, "Machine-readable output");
    sub->add_flag("--dump", opts.dump, "Print the generated bit sequence");
    sub->add_option("--steps", steps, "Number of output bits to simulate");
    sub->add_flag("--full-period", opts.full_period, "Simulate one full period");
    sub->add_flag("--trust-poly", opts.trust_poly,
                  "Accept polynomials too long to verify as maximum-length");
    sub->add_option("--tolerance", tolerance, "Relative tolerance p/q (default 1/100)");
    sub->add_option("--max-h-entries", opts.max_h_entries, "Explosion guard for the auxiliary sum");
    commands.emplace_back(sub, fn);
  };
  add("analyze", "Exact ones count and accept/reject verdict", cmd_analyze);
  add("expand", "List the minterms of the function", cmd_expand);
  add("simulate", "Clock the LFSRs and count ones", cmd_simulate);
  add("verify", "Cross-check the symbolic count against brute force", cmd_verify);
  add("check-rules", "Structural design-rule findings", cmd_check_rules);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (const char* env = std::getenv("BALANCEGATE_MAX_PERIOD")) {
    try {
      opts.max_period = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: BALANCEGATE_MAX_PERIOD must be a non-negative integer\n";
      return kExitInvalid;
    }
  }
  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    if (sub->count("--steps")) opts.steps = steps;
    if (sub->count("--tolerance")) opts.tolerance = tolerance;
    return fn(path, opts, out, err);
  }
  return kExitInvalid;
}

}  // namespace balancegate::cli
