#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace balancegate {

/// Fixed-width bit set over the L global variable positions.
///
/// Bit i set means variable i appears in true form (for a minterm) or is a
/// factor of the monomial (for an ANF term). Bit 0 is the rightmost position.
/// Ordering compares masks as unsigned L-bit integers; masks of different
/// widths order by width first.
class MintermMask {
 public:
  MintermMask() = default;
  explicit MintermMask(std::size_t width);

  /// Builds a mask from a right-to-left bit string such as "0000100100".
  /// Spaces are ignored so grouped renderings parse back.
  static MintermMask from_string(std::string_view bits);

  /// Width must be <= 64; higher bits of `value` must be clear.
  static MintermMask from_uint64(std::size_t width, std::uint64_t value);

  /// Mask with a single bit set.
  static MintermMask unit(std::size_t width, std::size_t bit);

  std::size_t width() const noexcept { return width_; }
  bool test(std::size_t bit) const;
  void set(std::size_t bit, bool value = true);

  /// d(mask): number of variables in true form.
  std::size_t popcount() const noexcept;
  /// Population count restricted to [offset, offset + length).
  std::size_t popcount(std::size_t offset, std::size_t length) const;

  bool none() const noexcept;
  bool is_subset_of(const MintermMask& other) const;

  /// Bitwise OR; widths must agree (ValidationError otherwise).
  MintermMask operator|(const MintermMask& other) const;
  MintermMask operator&(const MintermMask& other) const;
  MintermMask operator^(const MintermMask& other) const;

  /// Indices of set bits, ascending.
  std::vector<std::size_t> set_bits() const;

  /// Value of the low 64 bits.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Plain bit string, most significant position first.
  std::string to_string() const;

  friend bool operator==(const MintermMask&, const MintermMask&) = default;
  friend std::strong_ordering operator<=>(const MintermMask& a, const MintermMask& b);

 private:
  void check_same_width(const MintermMask& other) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct MintermMaskHash {
  std::size_t operator()(const MintermMask& m) const noexcept;
};

}  // namespace balancegate
