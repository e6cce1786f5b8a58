#include <doctest.h>

#include <random>

#include "balancegate/anf.hpp"
#include "balancegate/errors.hpp"
#include "oracle.hpp"

using namespace balancegate;

namespace {

MintermMask mask(const char* bits) { return MintermMask::from_string(bits); }

const RegisterLayout kGeffe({{'a', 2}, {'b', 3}, {'c', 5}});

Assignment assignment(std::size_t width, std::uint64_t bits) {
  return Assignment(MintermMask::from_uint64(width, bits));
}

}  // namespace

TEST_CASE("parse_function: conversion example") {
  const auto f = parse_function("m2*m0 ^ m2*m1 ^ m1", RegisterLayout::single(3));
  REQUIRE(f.size() == 3);
  CHECK(f.terms()[0] == mask("101"));
  CHECK(f.terms()[1] == mask("110"));
  CHECK(f.terms()[2] == mask("010"));
}

TEST_CASE("parse_function: Geffe terms in grouped layout") {
  const auto f = parse_function("a0*b0 ^ b0*c0 ^ c0", kGeffe);
  REQUIRE(f.size() == 3);
  CHECK(kGeffe.render(f.terms()[0]) == "00000 001 01");
  CHECK(kGeffe.render(f.terms()[1]) == "00001 001 00");
  CHECK(kGeffe.render(f.terms()[2]) == "00001 000 00");
}

TEST_CASE("parse_function: GF(2) canonicalization") {
  CHECK(parse_function("m0 ^ m0", RegisterLayout::single(4)).empty());
  const auto idem = parse_function("m1*m1", RegisterLayout::single(3));
  REQUIRE(idem.size() == 1);
  CHECK(idem.terms()[0] == mask("010"));
  // `+` is exclusive-OR too, and whitespace is free.
  const auto plus = parse_function("  m0*m1+m2 +m0 * m1 ", RegisterLayout::single(3));
  REQUIRE(plus.size() == 1);
  CHECK(plus.terms()[0] == mask("100"));
}

TEST_CASE("parse_function: single register accepts its own letter and m") {
  const RegisterLayout x = RegisterLayout::single(4, 'x');
  CHECK(parse_function("x3*m0", x).terms()[0] == mask("1001"));
  CHECK_THROWS_AS(parse_function("a0", x), ParseError);
}

TEST_CASE("parse_function: errors") {
  const auto single = RegisterLayout::single(3);
  CHECK_THROWS_AS(parse_function("", single), ParseError);
  CHECK_THROWS_AS(parse_function("   ", single), ParseError);
  CHECK_THROWS_AS(parse_function("m0 ^ 1", single), ParseError);
  CHECK_THROWS_AS(parse_function("0", single), ParseError);
  CHECK_THROWS_AS(parse_function("m3", single), ParseError);
  CHECK_THROWS_AS(parse_function("d0", kGeffe), ParseError);
  CHECK_THROWS_AS(parse_function("a2", kGeffe), ParseError);
  CHECK_THROWS_AS(parse_function("m0 ^", single), ParseError);
  CHECK_THROWS_AS(parse_function("m0 ** m1", single), ParseError);
  CHECK_THROWS_AS(parse_function("m0 m1", single), ParseError);
  CHECK_THROWS_AS(parse_function("m", single), ParseError);
  CHECK_THROWS_AS(parse_function("m0 | m1", single), ParseError);
  CHECK_THROWS_AS(parse_function("m0m1", single), ParseError);

  try {
    parse_function("m0 ^ 1", single);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("constant") != std::string::npos);
  }
}

TEST_CASE("evaluate") {
  const auto f = parse_function("m2*m0 ^ m2*m1 ^ m1", RegisterLayout::single(3));
  CHECK(evaluate(f, assignment(3, 0b111)));  // 1^1^1
  CHECK_FALSE(evaluate(AnfFunction(RegisterLayout::single(3)), assignment(3, 0b101)));
  const auto proj = parse_function("m1", RegisterLayout::single(3));
  CHECK(evaluate(proj, assignment(3, 0b010)));
  CHECK_THROWS_AS(evaluate(f, assignment(4, 0b1)), ValidationError);
}

TEST_CASE("AnfFunction rejects constant and mis-sized terms") {
  AnfFunction f(RegisterLayout::single(3));
  CHECK_THROWS_AS(f.toggle(MintermMask(3)), ValidationError);
  CHECK_THROWS_AS(f.toggle(mask("0001")), ValidationError);
  CHECK_THROWS_AS(AnfFunction::from_distinct_terms(RegisterLayout::single(2), {mask("01"), mask("01")}),
                  ValidationError);
}

TEST_CASE("to_string renders registers in layout order, indices descending") {
  CHECK(to_string(parse_function("m0*m2 ^ m1", RegisterLayout::single(3))) == "m2*m0 ^ m1");
  CHECK(to_string(parse_function("c0*a0 ^ b1", kGeffe)) == "a0*c0 ^ b1");
  CHECK(to_string(AnfFunction(kGeffe)) == "0");
}

TEST_CASE("property: canonical form agrees with raw GF(2) evaluation") {
  std::mt19937_64 rng(0xA11CE);
  const std::vector<std::vector<std::pair<char, std::size_t>>> layouts = {
      {{'m', 12}}, {{'m', 5}}, {{'a', 3}, {'b', 4}, {'c', 5}}, {{'a', 2}, {'b', 3}}};
  for (const auto& regs : layouts) {
    const RegisterLayout layout(regs);
    const std::size_t L = layout.total_length();
    for (int trial = 0; trial < 40; ++trial) {
      const auto raw = oracle::random_expr(rng, L, 7, 4);
      const auto f = parse_function(oracle::to_text(raw, regs), layout);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << L); ++x)
        REQUIRE(evaluate(f, assignment(L, x)) == oracle::eval_raw(raw, x));
    }
  }
}

TEST_CASE("property: print/parse round trip and XOR linearity") {
  std::mt19937_64 rng(77);
  const RegisterLayout layout({{'a', 3}, {'b', 4}, {'c', 3}});
  const std::size_t L = layout.total_length();
  std::vector<std::pair<char, std::size_t>> regs{{'a', 3}, {'b', 4}, {'c', 3}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = parse_function(oracle::to_text(oracle::random_expr(rng, L, 6, 3), regs), layout);
    const auto g = parse_function(oracle::to_text(oracle::random_expr(rng, L, 6, 3), regs), layout);
    if (!f.empty()) CHECK(parse_function(to_string(f), layout) == f);
    const auto sum = f ^ g;
    std::uniform_int_distribution<std::uint64_t> point(0, (std::uint64_t{1} << L) - 1);
    for (int k = 0; k < 64; ++k) {
      const auto x = assignment(L, point(rng));
      REQUIRE(evaluate(sum, x) == (evaluate(f, x) != evaluate(g, x)));
    }
  }
}
