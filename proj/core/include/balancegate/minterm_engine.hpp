#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "balancegate/anf.hpp"
#include "balancegate/layout.hpp"
#include "balancegate/mask.hpp"
#include "balancegate/numeric.hpp"

namespace balancegate {

/// The auxiliary function H: a signed multiset of minterms. Zero
/// coefficients are never stored.
class SignedMintermSum {
 public:
  using Map = std::map<MintermMask, BigInt>;

  SignedMintermSum() = default;
  explicit SignedMintermSum(std::size_t width) : width_(width) {}
  SignedMintermSum(std::size_t width,
                   std::initializer_list<std::pair<MintermMask, BigInt>> entries);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Coefficient of `mask`, zero when absent.
  BigInt coefficient(const MintermMask& mask) const;

  /// entries[mask] += delta, removing the entry if it reaches zero.
  void add(const MintermMask& mask, const BigInt& delta);

  SignedMintermSum& operator+=(const SignedMintermSum& other);
  /// this += factor * other
  void add_scaled(const SignedMintermSum& other, const BigInt& factor);

  Map::const_iterator begin() const noexcept { return entries_.begin(); }
  Map::const_iterator end() const noexcept { return entries_.end(); }

  friend bool operator==(const SignedMintermSum&, const SignedMintermSum&) = default;

 private:
  void check_width(const MintermMask& mask) const;

  std::size_t width_ = 0;
  Map entries_;
};

inline constexpr std::size_t kDefaultMaxHEntries = 1'000'000;
inline constexpr std::size_t kDefaultMaxExpansionLength = 24;

struct AccumulateOptions {
  std::size_t max_entries = kDefaultMaxHEntries;
};

/// Phi_F: each ANF term becomes the minterm with the same bit pattern.
std::vector<MintermMask> phi(const AnfFunction& f);

/// Maximum common development of two minterms: their bitwise union.
MintermMask mcd_masks(const MintermMask& a, const MintermMask& b);

/// MD(h, 1*M) = sum over (alpha, s) in h of s * M_{alpha | m}.
SignedMintermSum mcd_sum(const SignedMintermSum& h, const MintermMask& m);

/// H_0 = empty; H_i = H_{i-1} + M_i - 2 * MD(M_i, H_{i-1}).
/// Throws ResourceError when |H| exceeds options.max_entries.
SignedMintermSum accumulate(const std::vector<MintermMask>& masks, std::size_t width,
                            const AccumulateOptions& options = {});

/// Ones in a single-register output: sum_j s_j * 2^{L - d(beta_j)}.
/// Throws InternalError if the result leaves [0, 2^L - 1].
OnesCount ones_from_H_single(const SignedMintermSum& h, std::size_t length);

/// Multi-register count. Per entry and register I the factor is
/// 2^{L_I - d_I} when d_I >= 1 and 2^{L_I} - 1 when the segment is empty.
/// Throws ValidationError on non-coprime lengths, InternalError if the
/// result leaves [0, T].
OnesCount ones_from_H_multi(const SignedMintermSum& h, const RegisterLayout& layout);

/// Dispatches to the single- or multi-register count.
OnesCount ones_from_H(const SignedMintermSum& h, const RegisterLayout& layout);

/// ANF of the minterm function of `m`: every superset of m's variable set,
/// 2^{L - d(m)} terms. Throws ResourceError if L - d(m) > max_free_variables.
AnfFunction expand_minterm(const MintermMask& m, const RegisterLayout& layout,
                           std::size_t max_free_variables = kDefaultMaxExpansionLength);
AnfFunction expand_minterm(const MintermMask& m, std::size_t length,
                           std::size_t max_free_variables = kDefaultMaxExpansionLength);

/// Minterms of F via Phi, expansion with pairwise cancellation, then Phi
/// again. Throws ResourceError when the layout is longer than max_length.
std::set<MintermMask> minterm_expansion_of_F(
    const AnfFunction& f, std::size_t max_length = kDefaultMaxExpansionLength);

/// "+[1] 00000 001 01" style lines, one per entry, highest mask first.
std::vector<std::string> render(const SignedMintermSum& h, const RegisterLayout& layout);

}  // namespace balancegate
