#include <doctest.h>

#include <algorithm>
#include <random>

#include "balancegate/errors.hpp"
#include "balancegate/minterm_engine.hpp"
#include "oracle.hpp"

using namespace balancegate;

namespace {

MintermMask mask(const char* bits) { return MintermMask::from_string(bits); }

const RegisterLayout kGeffe({{'a', 2}, {'b', 3}, {'c', 5}});
const RegisterLayout kTable({{'a', 7}, {'b', 8}, {'c', 9}});

// H as listed for the case studies: grouped mask over {2,3,5} -> coefficient.
SignedMintermSum grouped(std::initializer_list<std::pair<const char*, int>> entries) {
  SignedMintermSum h(10);
  for (const auto& [bits, s] : entries) h.add(kGeffe.parse_mask(bits), s);
  return h;
}

// Same H with the masks moved onto the {7,8,9} layout.
SignedMintermSum widen(const SignedMintermSum& h) {
  SignedMintermSum out(kTable.total_length());
  for (const auto& [m, s] : h) {
    MintermMask w(kTable.total_length());
    for (auto bit : m.set_bits()) {
      const auto reg = kGeffe.register_of(bit);
      w.set(kTable.registers()[reg].offset + bit - kGeffe.registers()[reg].offset);
    }
    out.add(w, s);
  }
  return out;
}

}  // namespace

TEST_CASE("phi keeps term order and patterns") {
  const auto f = parse_function("m2*m0 ^ m2*m1 ^ m1", RegisterLayout::single(3));
  CHECK(phi(f) == std::vector<MintermMask>{mask("101"), mask("110"), mask("010")});
  CHECK(phi(AnfFunction(RegisterLayout::single(3))).empty());
  const auto g = parse_function("a0*b0 ^ b0*c0 ^ c0", kGeffe);
  CHECK(phi(g) == std::vector<MintermMask>{mask("0000000101"), mask("0000100100"), mask("0000100000")});
}

TEST_CASE("mcd_masks is bitwise union") {
  CHECK(mcd_masks(mask("0011"), mask("1001")) == mask("1011"));
  CHECK(mcd_masks(mask("0110"), mask("0110")) == mask("0110"));
  CHECK(mcd_masks(mask("0000000101"), mask("0000100100")) == mask("0000100101"));
  CHECK_THROWS_AS(mcd_masks(mask("01"), mask("001")), ValidationError);
}

TEST_CASE("mcd_sum") {
  const auto h = grouped({{"00000 001 01", 1}, {"00001 001 00", 1}, {"00001 001 01", -2}});
  const auto md = mcd_sum(h, kGeffe.parse_mask("00001 000 00"));
  CHECK(md == grouped({{"00001 001 00", 1}, {"00001 001 01", -1}}));

  CHECK(mcd_sum(SignedMintermSum(4), mask("0101")).empty());

  const SignedMintermSum h2(4, {{mask("1100"), 1}, {mask("0011"), 1}});
  CHECK(mcd_sum(h2, mask("0011")) == SignedMintermSum(4, {{mask("1111"), 1}, {mask("0011"), 1}}));
  CHECK_THROWS_AS(mcd_sum(h2, mask("011")), ValidationError);
}

TEST_CASE("accumulate: Geffe and the conversion example") {
  const auto g = parse_function("a0*b0 ^ b0*c0 ^ c0", kGeffe);
  CHECK(accumulate(phi(g), 10) ==
        grouped({{"00000 001 01", 1}, {"00001 000 00", 1}, {"00001 001 00", -1}}));

  const SignedMintermSum expected(3, {{mask("101"), 1}, {mask("110"), -1}, {mask("010"), 1}});
  CHECK(accumulate({mask("101"), mask("110"), mask("010")}, 3) == expected);
  CHECK(accumulate({}, 3).empty());
}

TEST_CASE("accumulate: case-study functions reproduce the listed H") {
  struct Case {
    const char* expr;
    SignedMintermSum h;
  };
  const std::vector<Case> cases = {
      {"a0*b0 ^ b0*c0 ^ a0*c0 ^ a0 ^ b0 ^ c0",
       grouped({{"00000 000 01", 1},
                {"00000 001 00", 1},
                {"00001 000 00", 1},
                {"00000 001 01", -1},
                {"00001 001 00", -1},
                {"00001 000 01", -1}})},
      {"a0*b0 ^ b0*c0 ^ a0 ^ b0 ^ c0",
       grouped({{"00000 000 01", 1},
                {"00000 001 00", 1},
                {"00001 000 00", 1},
                {"00000 001 01", -1},
                {"00001 001 00", -1},
                {"00001 000 01", -2},
                {"00001 001 01", 2}})},
      {"a0*b0 ^ b0*c0 ^ b0",
       grouped({{"00000 001 01", -1}, {"00001 001 00", -1}, {"00001 001 01", 2}, {"00000 001 00", 1}})},
      {"a0*b0 ^ b0*c0 ^ a0", grouped({{"00000 001 01", -1}, {"00001 001 00", 1}, {"00000 000 01", 1}})},
      {"a0*b0 ^ c0", grouped({{"00000 001 01", 1}, {"00001 000 00", 1}, {"00001 001 01", -2}})},
  };
  for (const auto& c : cases) {
    CAPTURE(c.expr);
    CHECK(accumulate(phi(parse_function(c.expr, kGeffe)), 10) == c.h);
    CHECK(accumulate(phi(parse_function(c.expr, kTable)), 24) == widen(c.h));
  }
}

TEST_CASE("ones_from_H_single") {
  const SignedMintermSum h(3, {{mask("101"), 1}, {mask("110"), -1}, {mask("010"), 1}});
  CHECK(ones_from_H_single(h, 3) == 4);
  for (std::size_t L = 1; L <= 70; L += 3)
    CHECK(ones_from_H_single(SignedMintermSum(L, {{MintermMask::unit(L, L / 2), 1}}), L) == pow2(L - 1));
  CHECK(ones_from_H_single(SignedMintermSum(5), 5) == 0);

  CHECK_THROWS_AS(ones_from_H_single(SignedMintermSum(3, {{mask("001"), -1}}), 3), InternalError);
  CHECK_THROWS_AS(ones_from_H_single(SignedMintermSum(3, {{mask("001"), 2}}), 3), InternalError);
}

TEST_CASE("ones_from_H_multi") {
  const auto geffe = grouped({{"00000 001 01", 1}, {"00001 000 00", 1}, {"00001 001 00", -1}});
  // 2*4*31 + 3*7*16 - 3*4*16, frozen from the brute-force oracle below.
  CHECK(ones_from_H_multi(geffe, kGeffe) == 392);
  CHECK(oracle::count_ones({{0, 2}, {2, 5}, {5}}, {2, 3, 5}) == 392);

  const auto f4 = accumulate(phi(parse_function("a0*b0 ^ c0", kTable)), 24);
  CHECK(ones_from_H_multi(f4, kTable) == 8282368);
  CHECK(ones_from_H_multi(SignedMintermSum(10), kGeffe) == 0);

  const RegisterLayout shared({{'a', 4}, {'b', 6}});
  CHECK_THROWS_AS(ones_from_H_multi(SignedMintermSum(10), shared), ValidationError);
  CHECK_THROWS_AS(ones_from_H_multi(grouped({{"00000 000 01", -1}}), kGeffe), InternalError);
}

TEST_CASE("expand_minterm matches the listed minterm functions") {
  const auto e011 = expand_minterm(mask("011"), 3);
  CHECK(e011 == parse_function("m2*m1*m0 ^ m1*m0", RegisterLayout::single(3)));
  const auto e001 = expand_minterm(mask("001"), 3);
  CHECK(e001 == parse_function("m2*m1*m0 ^ m2*m0 ^ m1*m0 ^ m0", RegisterLayout::single(3)));
  const auto full = expand_minterm(mask("11111"), 5);
  CHECK(full.size() == 1);
  CHECK(full.terms()[0] == mask("11111"));

  CHECK_THROWS_AS(expand_minterm(mask("000"), 3), ValidationError);
  CHECK_THROWS_AS(expand_minterm(MintermMask::unit(30, 0), 30, 20), ResourceError);
}

TEST_CASE("expand_minterm agrees with literal factor multiplication") {
  for (std::size_t L = 1; L <= 8; ++L) {
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << L); ++a) {
      std::set<std::uint64_t> got;
      const auto f = expand_minterm(MintermMask::from_uint64(L, a), L);
      for (const auto& t : f.terms()) got.insert(t.low_word());
      REQUIRE(got == oracle::minterm_anf(a, L));
    }
  }
}

TEST_CASE("minterm_expansion_of_F") {
  const auto f = parse_function("m2*m0 ^ m2*m1 ^ m1", RegisterLayout::single(3));
  CHECK(minterm_expansion_of_F(f) ==
        std::set<MintermMask>{mask("111"), mask("101"), mask("011"), mask("010")});
  CHECK(minterm_expansion_of_F(parse_function("m2*m1*m0", RegisterLayout::single(3))) ==
        std::set<MintermMask>{mask("111")});
  CHECK(minterm_expansion_of_F(AnfFunction(RegisterLayout::single(3))).empty());
  CHECK_THROWS_AS(minterm_expansion_of_F(AnfFunction(RegisterLayout::single(30)), 24), ResourceError);
}

TEST_CASE("explosion guard") {
  std::vector<MintermMask> masks;
  for (std::size_t i = 0; i < 12; ++i) masks.push_back(MintermMask::unit(12, i));
  // Twelve distinct linear terms: H ends with every nonempty union, 4095 entries.
  CHECK(accumulate(masks, 12).size() == 4095);
  CHECK_THROWS_AS(accumulate(masks, 12, {.max_entries = 100}), ResourceError);
}

TEST_CASE("render H") {
  const auto g = parse_function("a0*b0 ^ b0*c0 ^ c0", kGeffe);
  CHECK(render(accumulate(phi(g), 10), kGeffe) ==
        std::vector<std::string>{"-[1] 00001 001 00", "+[1] 00001 000 00", "+[1] 00000 001 01"});
}

TEST_CASE("property: accumulation is order independent") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t L = 10;
    std::uniform_int_distribution<std::uint64_t> pick(1, (1U << L) - 1);
    std::uniform_int_distribution<std::size_t> count(1, 8);
    std::vector<MintermMask> masks;
    for (std::size_t n = count(rng); n > 0; --n) masks.push_back(MintermMask::from_uint64(L, pick(rng)));
    const auto reference = accumulate(masks, L);
    for (int p = 0; p < 10; ++p) {
      std::shuffle(masks.begin(), masks.end(), rng);
      REQUIRE(accumulate(masks, L) == reference);
    }
  }
}

TEST_CASE("property: support closure") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t L = 9;
    std::uniform_int_distribution<std::uint64_t> pick(1, (1U << L) - 1);
    std::vector<std::uint64_t> raw;
    for (int n = 0; n < 6; ++n) raw.push_back(pick(rng));
    std::set<std::uint64_t> unions;
    for (std::uint64_t subset = 1; subset < 64; ++subset) {
      std::uint64_t u = 0;
      for (int i = 0; i < 6; ++i)
        if (subset >> i & 1U) u |= raw[i];
      unions.insert(u);
    }
    std::vector<MintermMask> masks;
    for (auto r : raw) masks.push_back(MintermMask::from_uint64(L, r));
    const auto h = accumulate(masks, L);
    CHECK(h.size() <= 63);
    for (const auto& [m, s] : h) REQUIRE(unions.count(m.low_word()) == 1);
  }
}

TEST_CASE("property: symbolic count equals brute force (single register)") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 12);
    const std::size_t L = len(rng);
    const auto raw = oracle::random_expr(rng, L, 6, std::min<std::size_t>(L, 4));
    const auto f = parse_function(oracle::to_text(raw, {{'m', L}}), RegisterLayout::single(L));
    const auto expected = oracle::count_ones(raw, {L});
    CAPTURE(to_string(f));
    REQUIRE(ones_from_H_single(accumulate(phi(f), L), L) == expected);
    REQUIRE(minterm_expansion_of_F(f).size() == expected);
  }
}

TEST_CASE("property: symbolic count equals brute force (coprime registers)") {
  std::mt19937_64 rng(31337);
  const std::vector<std::vector<std::pair<char, std::size_t>>> layouts = {
      {{'a', 2}, {'b', 3}, {'c', 5}}, {{'a', 3}, {'b', 4}, {'c', 5}}, {{'a', 5}, {'b', 9}},
      {{'a', 1}, {'b', 2}, {'c', 3}}, {{'a', 4}, {'b', 3}, {'c', 7}}, {{'x', 2}, {'y', 5}, {'z', 7}}};
  for (const auto& regs : layouts) {
    const RegisterLayout layout(regs);
    std::vector<std::size_t> lengths;
    for (const auto& r : regs) lengths.push_back(r.second);
    for (int trial = 0; trial < 25; ++trial) {
      const auto raw = oracle::random_expr(rng, layout.total_length(), 6, 3);
      const auto f = parse_function(oracle::to_text(raw, regs), layout);
      CAPTURE(to_string(f));
      REQUIRE(ones_from_H_multi(accumulate(phi(f), layout.total_length()), layout) ==
              oracle::count_ones(raw, lengths));
    }
  }
}
