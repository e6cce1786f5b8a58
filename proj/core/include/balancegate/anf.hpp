#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "balancegate/layout.hpp"
#include "balancegate/mask.hpp"

namespace balancegate {

/// Boolean function in Algebraic Normal Form: an exclusive-OR sum of
/// monomials, each stored as the mask of its variables.
///
/// Terms keep their first-appearance order; identical monomials cancel in
/// pairs, so no mask occurs twice. The constant monomial is not
/// representable, and the empty sum is the all-zero function.
class AnfFunction {
 public:
  explicit AnfFunction(RegisterLayout layout);

  /// Canonicalizes `terms` (pairwise XOR cancellation). Throws
  /// ValidationError on a zero mask or a width mismatch with the layout.
  AnfFunction(RegisterLayout layout, const std::vector<MintermMask>& terms);

  /// Adopts terms that are already distinct (checked). Linear-time
  /// alternative to the canonicalizing constructor for large expansions.
  static AnfFunction from_distinct_terms(RegisterLayout layout, std::vector<MintermMask> terms);

  const RegisterLayout& layout() const noexcept { return layout_; }
  const std::vector<MintermMask>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool contains(const MintermMask& term) const;

  /// Exclusive-OR a monomial into the sum (adds it, or cancels an equal one).
  void toggle(const MintermMask& term);

  /// Symmetric difference of the term sets. Layouts must match.
  AnfFunction operator^(const AnfFunction& other) const;

  /// Same layout and same term set, regardless of order.
  friend bool operator==(const AnfFunction& a, const AnfFunction& b);

 private:
  RegisterLayout layout_;
  std::vector<MintermMask> terms_;
};

/// Values for all L variables of a layout.
class Assignment {
 public:
  explicit Assignment(std::size_t width) : bits_(width) {}
  explicit Assignment(MintermMask ones) : bits_(std::move(ones)) {}

  std::size_t size() const noexcept { return bits_.width(); }
  bool operator[](std::size_t i) const { return bits_.test(i); }
  void set(std::size_t i, bool value) { bits_.set(i, value); }

  /// The variables that are 1.
  const MintermMask& ones() const noexcept { return bits_; }

 private:
  MintermMask bits_;
};

/// Grammar: variables are <letter><index> (m0, a12); `*` joins variables into
/// a monomial; `^` or `+` joins monomials; whitespace is ignored. In a
/// single-register layout the letter `m` also refers to that register.
/// Constants are rejected.
AnfFunction parse_function(std::string_view text, const RegisterLayout& layout);

/// XOR over terms of the AND of the selected variables.
/// Throws ValidationError on a width mismatch.
bool evaluate(const AnfFunction& f, const Assignment& x);

/// Renders in the parse grammar ("a0*b0 ^ c0"); the empty function is "0".
std::string to_string(const AnfFunction& f);

/// One monomial, e.g. "m2*m0".
std::string term_to_string(const MintermMask& term, const RegisterLayout& layout);

}  // namespace balancegate
