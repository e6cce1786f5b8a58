#include "balancegate/mask.hpp"

#include <bit>

#include "balancegate/errors.hpp"

namespace balancegate {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

}  // namespace

MintermMask::MintermMask(std::size_t width) : width_(width), words_(words_for(width), 0) {}

MintermMask MintermMask::from_string(std::string_view bits) {
  std::string digits;
  for (char c : bits) {
    if (c == ' ') continue;
    if (c != '0' && c != '1')
      throw ValidationError("invalid character in bit string '" + std::string(bits) + "'");
    digits.push_back(c);
  }
  MintermMask m(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[digits.size() - 1 - i] == '1') m.set(i);
  return m;
}

MintermMask MintermMask::from_uint64(std::size_t width, std::uint64_t value) {
  if (width > kWordBits || (width < kWordBits && (value >> width) != 0))
    throw ValidationError("value does not fit in a " + std::to_string(width) + "-bit mask");
  MintermMask m(width);
  if (width > 0) m.words_[0] = value;
  return m;
}

MintermMask MintermMask::unit(std::size_t width, std::size_t bit) {
  MintermMask m(width);
  m.set(bit);
  return m;
}

bool MintermMask::test(std::size_t bit) const {
  if (bit >= width_) throw ValidationError("bit " + std::to_string(bit) + " outside mask width");
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

void MintermMask::set(std::size_t bit, bool value) {
  if (bit >= width_) throw ValidationError("bit " + std::to_string(bit) + " outside mask width");
  const std::uint64_t flag = std::uint64_t{1} << (bit % kWordBits);
  if (value)
    words_[bit / kWordBits] |= flag;
  else
    words_[bit / kWordBits] &= ~flag;
}

std::size_t MintermMask::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t MintermMask::popcount(std::size_t offset, std::size_t length) const {
  if (offset + length > width_) throw ValidationError("popcount range outside mask width");
  std::size_t n = 0;
  std::size_t bit = offset;
  const std::size_t end = offset + length;
  while (bit < end) {
    const std::size_t word = bit / kWordBits;
    const std::size_t lo = bit % kWordBits;
    const std::size_t take = std::min(kWordBits - lo, end - bit);
    std::uint64_t w = words_[word] >> lo;
    if (take < kWordBits) w &= (std::uint64_t{1} << take) - 1;
    n += static_cast<std::size_t>(std::popcount(w));
    bit += take;
  }
  return n;
}

bool MintermMask::none() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool MintermMask::is_subset_of(const MintermMask& other) const {
  check_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

void MintermMask::check_same_width(const MintermMask& other) const {
  if (width_ != other.width_)
    throw ValidationError("mask width mismatch: " + std::to_string(width_) + " vs " +
                          std::to_string(other.width_));
}

MintermMask MintermMask::operator|(const MintermMask& other) const {
  check_same_width(other);
  MintermMask r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
  return r;
}

MintermMask MintermMask::operator&(const MintermMask& other) const {
  check_same_width(other);
  MintermMask r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

MintermMask MintermMask::operator^(const MintermMask& other) const {
  check_same_width(other);
  MintermMask r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= other.words_[i];
  return r;
}

std::vector<std::size_t> MintermMask::set_bits() const {
  std::vector<std::size_t> bits;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      bits.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return bits;
}

std::string MintermMask::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i)
    if (test(i)) s[width_ - 1 - i] = '1';
  return s;
}

std::strong_ordering operator<=>(const MintermMask& a, const MintermMask& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t MintermMaskHash::operator()(const MintermMask& m) const noexcept {
  std::size_t h = m.width() * 0x9e3779b97f4a7c15ULL;
  for (auto w : m.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace balancegate
