#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// minterm engine or the library's own truth-table counter.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Monomial as a list of global variable indices (repeats allowed).
using RawTerm = std::vector<std::size_t>;
/// XOR of monomials, not canonicalized (duplicates allowed).
using RawExpr = std::vector<RawTerm>;

inline bool eval_raw(const RawExpr& expr, std::uint64_t x) {
  bool out = false;
  for (const auto& term : expr) {
    bool product = true;
    for (auto v : term) product = product && ((x >> v) & 1U);
    out ^= product;
  }
  return out;
}

/// True when every register segment of x is nonzero.
inline bool segments_nonzero(std::uint64_t x, const std::vector<std::size_t>& lengths) {
  std::size_t offset = 0;
  for (auto len : lengths) {
    if (((x >> offset) & ((std::uint64_t{1} << len) - 1)) == 0) return false;
    offset += len;
  }
  return true;
}

/// Counts joint states (each segment nonzero) where expr is 1.
inline std::uint64_t count_ones(const RawExpr& expr, const std::vector<std::size_t>& lengths) {
  std::size_t total = 0;
  for (auto l : lengths) total += l;
  std::uint64_t ones = 0;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << total); ++x)
    if (segments_nonzero(x, lengths) && eval_raw(expr, x)) ++ones;
  return ones;
}

/// ANF of the minterm alpha by literal multiplication of the factors
/// m_i (true form) and (1 ^ m_i) (complemented). Monomials are bit masks;
/// 0 stands for the constant 1.
inline std::set<std::uint64_t> minterm_anf(std::uint64_t alpha, std::size_t length) {
  std::set<std::uint64_t> poly{0};
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    std::set<std::uint64_t> times_var;
    for (auto t : poly) {
      const auto p = t | bit;
      if (!times_var.insert(p).second) times_var.erase(p);
    }
    if (alpha & bit) {
      poly = times_var;
    } else {
      for (auto t : times_var)
        if (!poly.insert(t).second) poly.erase(t);
    }
  }
  return poly;
}

/// Minterms of a function: nonzero points where it evaluates to 1.
inline std::set<std::uint64_t> minterms(const RawExpr& expr, std::size_t length) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << length); ++x)
    if (eval_raw(expr, x)) out.insert(x);
  return out;
}

inline std::string to_text(const RawExpr& expr, const std::vector<std::pair<char, std::size_t>>& regs) {
  std::string s;
  for (const auto& term : expr) {
    if (!s.empty()) s += " ^ ";
    std::string t;
    for (auto v : term) {
      std::size_t offset = 0;
      for (const auto& [name, len] : regs) {
        if (v < offset + len) {
          if (!t.empty()) t += "*";
          t += name + std::to_string(v - offset);
          break;
        }
        offset += len;
      }
    }
    s += t;
  }
  return s;
}

/// Random expression of 1..max_terms monomials of order 1..max_order over
/// `total` variables. Repeated variables and repeated monomials may occur.
inline RawExpr random_expr(std::mt19937_64& rng, std::size_t total, std::size_t max_terms,
                           std::size_t max_order) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> order(1, max_order);
  std::uniform_int_distribution<std::size_t> var(0, total - 1);
  RawExpr e(nterms(rng));
  for (auto& t : e) {
    const auto k = order(rng);
    for (std::size_t i = 0; i < k; ++i) t.push_back(var(rng));
  }
  return e;
}

}  // namespace oracle
