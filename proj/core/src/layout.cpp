#include "balancegate/layout.hpp"

#include <cctype>
#include <numeric>

#include "balancegate/errors.hpp"

namespace balancegate {

RegisterLayout::RegisterLayout(std::vector<std::pair<char, std::size_t>> registers) {
  if (registers.empty()) throw ValidationError("layout needs at least one register");
  for (const auto& [name, length] : registers) {
    if (!std::isalpha(static_cast<unsigned char>(name)))
      throw ValidationError(std::string("register name '") + name + "' is not a letter");
    if (length == 0) throw ValidationError(std::string("register '") + name + "' has zero length");
    if (find(name)) throw ValidationError(std::string("duplicate register name '") + name + "'");
    registers_.push_back({name, length, total_length_});
    total_length_ += length;
  }
}

RegisterLayout RegisterLayout::single(std::size_t length, char name) {
  return RegisterLayout({{name, length}});
}

std::optional<std::size_t> RegisterLayout::find(char name) const {
  for (std::size_t i = 0; i < registers_.size(); ++i)
    if (registers_[i].name == name) return i;
  return std::nullopt;
}

std::size_t RegisterLayout::register_of(std::size_t bit) const {
  for (std::size_t i = 0; i < registers_.size(); ++i)
    if (bit < registers_[i].offset + registers_[i].length) return i;
  throw ValidationError("bit " + std::to_string(bit) + " outside layout");
}

std::string RegisterLayout::variable_name(std::size_t bit) const {
  const auto& reg = registers_[register_of(bit)];
  return std::string(1, reg.name) + std::to_string(bit - reg.offset);
}

bool RegisterLayout::pairwise_coprime() const {
  for (std::size_t i = 0; i < registers_.size(); ++i)
    for (std::size_t j = i + 1; j < registers_.size(); ++j)
      if (std::gcd(registers_[i].length, registers_[j].length) != 1) return false;
  return true;
}

void RegisterLayout::require_coprime() const {
  for (std::size_t i = 0; i < registers_.size(); ++i)
    for (std::size_t j = i + 1; j < registers_.size(); ++j)
      if (std::gcd(registers_[i].length, registers_[j].length) != 1)
        throw ValidationError(std::string("register lengths are not pairwise coprime: ") +
                              registers_[i].name + "=" + std::to_string(registers_[i].length) +
                              ", " + registers_[j].name + "=" +
                              std::to_string(registers_[j].length));
}

BigInt RegisterLayout::period() const {
  require_coprime();
  BigInt t = 1;
  for (const auto& reg : registers_) t *= pow2(reg.length) - 1;
  return t;
}

std::string RegisterLayout::render(const MintermMask& mask) const {
  if (mask.width() != total_length_) throw ValidationError("mask width does not match layout");
  std::string out;
  for (std::size_t r = registers_.size(); r-- > 0;) {
    const auto& reg = registers_[r];
    for (std::size_t k = reg.length; k-- > 0;) out.push_back(mask.test(reg.offset + k) ? '1' : '0');
    if (r != 0) out.push_back(' ');
  }
  return out;
}

MintermMask RegisterLayout::parse_mask(std::string_view grouped) const {
  std::vector<std::string_view> groups;
  std::size_t i = 0;
  while (i < grouped.size()) {
    while (i < grouped.size() && grouped[i] == ' ') ++i;
    std::size_t j = i;
    while (j < grouped.size() && grouped[j] != ' ') ++j;
    if (j > i) groups.push_back(grouped.substr(i, j - i));
    i = j;
  }
  if (groups.size() != registers_.size())
    throw ValidationError("mask '" + std::string(grouped) + "' does not have one group per register");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& reg = registers_[registers_.size() - 1 - g];
    if (groups[g].size() != reg.length)
      throw ValidationError("mask group for register '" + std::string(1, reg.name) +
                            "' has the wrong length");
  }
  return MintermMask::from_string(grouped);
}

}  // namespace balancegate
