#include "balancegate/minterm_engine.hpp"

#include <bit>
#include <unordered_set>

#include "balancegate/errors.hpp"

namespace balancegate {

SignedMintermSum::SignedMintermSum(std::size_t width,
                                   std::initializer_list<std::pair<MintermMask, BigInt>> entries)
    : width_(width) {
  for (const auto& [mask, s] : entries) add(mask, s);
}

void SignedMintermSum::check_width(const MintermMask& mask) const {
  if (mask.width() != width_)
    throw ValidationError("mask width " + std::to_string(mask.width()) +
                          " does not match sum width " + std::to_string(width_));
}

BigInt SignedMintermSum::coefficient(const MintermMask& mask) const {
  auto it = entries_.find(mask);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void SignedMintermSum::add(const MintermMask& mask, const BigInt& delta) {
  check_width(mask);
  if (delta == 0) return;
  auto [it, inserted] = entries_.try_emplace(mask, delta);
  if (inserted) return;
  it->second += delta;
  if (it->second == 0) entries_.erase(it);
}

SignedMintermSum& SignedMintermSum::operator+=(const SignedMintermSum& other) {
  for (const auto& [mask, s] : other) add(mask, s);
  return *this;
}

void SignedMintermSum::add_scaled(const SignedMintermSum& other, const BigInt& factor) {
  if (factor == 0) return;
  for (const auto& [mask, s] : other) add(mask, s * factor);
}

std::vector<MintermMask> phi(const AnfFunction& f) { return f.terms(); }

MintermMask mcd_masks(const MintermMask& a, const MintermMask& b) { return a | b; }

SignedMintermSum mcd_sum(const SignedMintermSum& h, const MintermMask& m) {
  if (m.width() != h.width() && !h.empty())
    throw ValidationError("mask width does not match sum width");
  SignedMintermSum out(m.width());
  for (const auto& [alpha, s] : h) out.add(mcd_masks(alpha, m), s);
  return out;
}

SignedMintermSum accumulate(const std::vector<MintermMask>& masks, std::size_t width,
                            const AccumulateOptions& options) {
  SignedMintermSum h(width);
  for (const auto& m : masks) {
    const SignedMintermSum common = mcd_sum(h, m);
    h.add(m, 1);
    h.add_scaled(common, -2);
    if (h.size() > options.max_entries)
      throw ResourceError("auxiliary sum exceeded " + std::to_string(options.max_entries) +
                          " entries; raise the limit or simplify the function");
  }
  return h;
}

OnesCount ones_from_H_single(const SignedMintermSum& h, std::size_t length) {
  BigInt total = 0;
  for (const auto& [beta, s] : h) {
    if (beta.width() != length) throw ValidationError("mask width does not match register length");
    if (beta.none()) throw ValidationError("zero mask in auxiliary sum");
    total += s * pow2(length - beta.popcount());
  }
  if (total < 0 || total > pow2(length) - 1)
    throw InternalError("ones count " + total.str() + " outside [0, 2^" + std::to_string(length) +
                        " - 1]");
  return total;
}

OnesCount ones_from_H_multi(const SignedMintermSum& h, const RegisterLayout& layout) {
  const BigInt period = layout.period();
  BigInt total = 0;
  for (const auto& [beta, s] : h) {
    if (beta.width() != layout.total_length())
      throw ValidationError("mask width does not match layout length");
    BigInt term = s;
    for (const auto& reg : layout.registers()) {
      const std::size_t d = beta.popcount(reg.offset, reg.length);
      term *= d == 0 ? pow2(reg.length) - 1 : pow2(reg.length - d);
    }
    total += term;
  }
  if (total < 0 || total > period)
    throw InternalError("ones count " + total.str() + " outside [0, " + period.str() + "]");
  return total;
}

OnesCount ones_from_H(const SignedMintermSum& h, const RegisterLayout& layout) {
  return layout.is_single() ? ones_from_H_single(h, layout.total_length())
                            : ones_from_H_multi(h, layout);
}

namespace {

// Calls visit(mask) for every superset of m.
template <typename Visit>
void for_each_superset(const MintermMask& m, std::size_t max_free, Visit&& visit) {
  std::vector<std::size_t> free_bits;
  for (std::size_t i = 0; i < m.width(); ++i)
    if (!m.test(i)) free_bits.push_back(i);
  if (free_bits.size() > max_free)
    throw ResourceError("minterm expansion needs 2^" + std::to_string(free_bits.size()) +
                        " terms (limit 2^" + std::to_string(max_free) + ")");
  const std::uint64_t count = std::uint64_t{1} << free_bits.size();
  MintermMask current = m;
  visit(current);
  // Gray-code walk: one bit flips per step.
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(i));
    current.set(free_bits[flip], !current.test(free_bits[flip]));
    visit(current);
  }
}

}  // namespace

AnfFunction expand_minterm(const MintermMask& m, const RegisterLayout& layout,
                           std::size_t max_free_variables) {
  if (m.width() != layout.total_length()) throw ValidationError("mask width does not match layout");
  if (m.none()) throw ValidationError("the all-complemented minterm is excluded");
  std::vector<MintermMask> terms;
  for_each_superset(m, max_free_variables, [&](const MintermMask& t) { terms.push_back(t); });
  return AnfFunction::from_distinct_terms(layout, std::move(terms));
}

AnfFunction expand_minterm(const MintermMask& m, std::size_t length,
                           std::size_t max_free_variables) {
  return expand_minterm(m, RegisterLayout::single(length), max_free_variables);
}

std::set<MintermMask> minterm_expansion_of_F(const AnfFunction& f, std::size_t max_length) {
  const std::size_t length = f.layout().total_length();
  if (length > max_length)
    throw ResourceError("minterm expansion limited to " + std::to_string(max_length) +
                        " variables, layout has " + std::to_string(length));
  // Step 2: expand every minterm of Phi_F and cancel common terms pairwise.
  std::unordered_set<MintermMask, MintermMaskHash> surviving;
  for (const auto& alpha : phi(f)) {
    for_each_superset(alpha, max_length, [&](const MintermMask& t) {
      if (auto [it, inserted] = surviving.insert(t); !inserted) surviving.erase(it);
    });
  }
  // Step 3: Phi maps each surviving term back to the minterm of the same pattern.
  return {surviving.begin(), surviving.end()};
}

std::vector<std::string> render(const SignedMintermSum& h, const RegisterLayout& layout) {
  std::vector<std::string> lines;
  for (auto it = h.end(); it != h.begin();) {
    --it;
    const auto& [mask, s] = *it;
    const BigInt mag = s < 0 ? BigInt(-s) : s;
    lines.push_back(std::string(s < 0 ? "-" : "+") + "[" + mag.str() + "] " + layout.render(mask));
  }
  return lines;
}

}  // namespace balancegate
