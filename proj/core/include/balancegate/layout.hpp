#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balancegate/mask.hpp"
#include "balancegate/numeric.hpp"

namespace balancegate {

struct Register {
  char name;
  std::size_t length;
  std::size_t offset;  // first global bit position

  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered registers partitioning the L global bit positions. The first
/// register occupies the rightmost (least significant) bits.
class RegisterLayout {
 public:
  /// Throws ValidationError on duplicate/non-letter names or zero lengths.
  explicit RegisterLayout(std::vector<std::pair<char, std::size_t>> registers);

  /// One register named `name` of length `length`.
  static RegisterLayout single(std::size_t length, char name = 'm');

  const std::vector<Register>& registers() const noexcept { return registers_; }
  std::size_t size() const noexcept { return registers_.size(); }
  std::size_t total_length() const noexcept { return total_length_; }
  bool is_single() const noexcept { return registers_.size() == 1; }

  std::optional<std::size_t> find(char name) const;

  /// Register index owning global bit `bit`.
  std::size_t register_of(std::size_t bit) const;

  /// Variable name of a global bit, e.g. "b0" or "m12".
  std::string variable_name(std::size_t bit) const;

  bool pairwise_coprime() const;

  /// Throws ValidationError naming the offending pair if lengths share a factor.
  void require_coprime() const;

  /// T = prod (2^{L_I} - 1). Requires pairwise-coprime lengths.
  BigInt period() const;

  /// Bit string grouped per register, last register leftmost: "00001 001 00".
  std::string render(const MintermMask& mask) const;

  /// Inverse of render(); group sizes must match the layout.
  MintermMask parse_mask(std::string_view grouped) const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

 private:
  std::vector<Register> registers_;
  std::size_t total_length_ = 0;
};

}  // namespace balancegate
