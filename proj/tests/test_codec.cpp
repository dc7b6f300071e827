#include "icb/codec.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "graphs.hpp"
#include "icb/bounds.hpp"

using namespace icb;

namespace {

SideInfoGraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto flip = [&] { return (gen() >> 11) * 0x1.0p-53 < p; };
  std::vector<std::pair<int, int>> arcs;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && flip()) arcs.emplace_back(u, v);
  return SideInfoGraph(n, Mode::Directed, std::move(arcs));
}

}  // namespace

TEST_CASE("clique cover code for the three-receiver example") {
  auto code = build_clique_cover_code(fixtures::fig1());
  CHECK(code.n == 3);
  CHECK(code.t == 1);
  REQUIRE(code.transmissions.size() == 2);
  CHECK(code.transmissions[0] == std::vector<PartRef>{{1, 1}, {2, 1}});
  CHECK(code.transmissions[1] == std::vector<PartRef>{{3, 1}});
  CHECK(code_rate(code) == Rational(2));

  // x = (1, 0, 1) -> (x1 xor x2, x3) = (1, 1).
  auto y = encode(code, {1, {1, 0, 1}});
  CHECK(y == std::vector<std::uint8_t>{1, 1});

  // Receiver 1 knows x2 = 0 and cancels it from slot 1.
  CHECK(decode(code, 1, y, {{2, 0}, {3, 1}}) == 1);
  // Receiver 3's slot is a singleton; no side information touched.
  CHECK(decode(code, 3, y, {}) == 1);

  auto check = verify_code(fixtures::fig1(), code);
  CHECK(check.pass);
  CHECK(check.exhaustive);
  CHECK(check.cases == 8);
}

TEST_CASE("trivial covers: complete and edgeless") {
  auto one = build_clique_cover_code(fixtures::complete(6).as_side_info());
  CHECK(one.transmissions.size() == 1);
  CHECK(one.transmissions[0].size() == 6);
  CHECK(code_rate(one) == Rational(1));
  CHECK(verify_code(fixtures::complete(6).as_side_info(), one).pass);

  auto flat = build_clique_cover_code(fixtures::edgeless(5).as_side_info());
  CHECK(flat.transmissions.size() == 5);
  for (const auto& slot : flat.transmissions) CHECK(slot.size() == 1);
  CHECK(code_rate(flat) == Rational(5));
}

TEST_CASE("fractional code halves C5 messages across the five edges") {
  auto g = fixtures::cycle(5).as_side_info();
  auto code = build_fractional_code(g, 2);
  CHECK(code.t == 2);
  CHECK(code.transmissions.size() == 5);
  CHECK(code_rate(code) == Rational(5, 2));
  // Each slot is one of the five edges, both parts placed.
  for (const auto& slot : code.transmissions) CHECK(slot.size() == 2);

  auto check = verify_code(g, code);
  CHECK(check.pass);
  CHECK(check.exhaustive);
  CHECK(check.cases == 1024);
}

TEST_CASE("fractional code with b = 1 is the clique cover code") {
  for (const auto& g : {fixtures::fig1(), fixtures::cycle(5).as_side_info(),
                        fixtures::dig8(), fixtures::complete(4).as_side_info()}) {
    auto a = build_clique_cover_code(g);
    auto b = build_fractional_code(g, 1);
    CHECK(a.n == b.n);
    CHECK(a.t == b.t);
    CHECK(a.transmissions == b.transmissions);
    CHECK(a.assignment == b.assignment);
  }
}

TEST_CASE("K3 at b = 2 still costs one bit per message") {
  auto g = fixtures::complete(3).as_side_info();
  auto code = build_fractional_code(g, 2);
  CHECK(code.t == 2);
  CHECK(code.transmissions.size() == 2);
  CHECK(code_rate(code) == Rational(1));
  CHECK(verify_code(g, code).pass);
}

TEST_CASE("builder limits and argument checks") {
  CHECK_THROWS_AS(build_clique_cover_code(fixtures::edgeless(21).as_side_info()),
                  Error);
  CHECK_THROWS_AS(build_fractional_code(fixtures::cycle(5).as_side_info(), 0), Error);
  CHECK_THROWS_AS(build_fractional_code(fixtures::cycle(5).as_side_info(), 5), Error);
  CHECK_THROWS_AS(build_fractional_code(fixtures::edgeless(11).as_side_info(), 2),
                  Error);
  Limits wide;
  wide.exact_limit = 22;
  CHECK(build_fractional_code(fixtures::edgeless(11).as_side_info(), 2, wide).t == 2);
}

TEST_CASE("encode validates its input") {
  auto code = build_clique_cover_code(fixtures::fig1());
  CHECK(encode(code, {1, {0, 0, 0}}) == std::vector<std::uint8_t>{0, 0});
  CHECK_THROWS_AS(encode(code, {2, {1, 0, 1}}), Error);       // wrong t
  CHECK_THROWS_AS(encode(code, {1, {1, 0}}), Error);          // wrong n
  CHECK_THROWS_AS(encode(code, {1, {2, 0, 1}}), Error);       // value too wide
}

TEST_CASE("decode validates its input") {
  auto code = build_clique_cover_code(fixtures::fig1());
  auto y = encode(code, {1, {1, 1, 0}});
  CHECK_THROWS_AS(decode(code, 0, y, {}), Error);
  CHECK_THROWS_AS(decode(code, 4, y, {}), Error);
  CHECK_THROWS_AS(decode(code, 1, {1}, {{2, 0}}), Error);     // short y
  CHECK_THROWS_AS(decode(code, 1, {1, 2}, {{2, 0}}), Error);  // non-bit y
  CHECK_THROWS_AS(decode(code, 1, y, {}), Error);             // missing side info
  CHECK(decode(code, 1, y, {{2, 1}}) == 1);
}

TEST_CASE("verification flags a non-clique slot") {
  auto g = fixtures::fig1();
  auto code = build_clique_cover_code(g);
  // Move x3 into slot 1: receiver 2 never learns x3 and cannot cancel it.
  IndexCode bad = code;
  bad.transmissions = {{{1, 1}, {2, 1}, {3, 1}}};
  bad.assignment = {{0}, {0}, {0}};
  auto check = verify_code(g, bad);
  CHECK_FALSE(check.pass);
  CHECK(check.bad_slot == 1);
  CHECK(check.failure.find("not bidirectional") != std::string::npos);
}

TEST_CASE("verification flags decode failures of a structurally fine code") {
  // Swap which slot carries each message of a 2-clique-free pair: structure
  // stays a partition into cliques but receivers read the wrong slots.
  auto g = fixtures::edgeless(2).as_side_info();
  IndexCode code;
  code.n = 2;
  code.t = 1;
  code.transmissions = {{{1, 1}}, {{2, 1}}};
  code.assignment = {{1}, {0}};  // deliberately crossed
  auto check = verify_code(g, code);
  CHECK_FALSE(check.pass);
  CHECK(check.failure.find("disagrees") != std::string::npos);
}

TEST_CASE("verification notices missing or duplicated parts") {
  auto g = fixtures::edgeless(2).as_side_info();
  IndexCode dup;
  dup.n = 2;
  dup.t = 1;
  dup.transmissions = {{{1, 1}}, {{1, 1}}};
  dup.assignment = {{0}, {1}};
  auto check = verify_code(g, dup);
  CHECK_FALSE(check.pass);
  CHECK(check.failure.find("two slots") != std::string::npos);

  IndexCode missing;
  missing.n = 2;
  missing.t = 1;
  missing.transmissions = {{{1, 1}}};
  missing.assignment = {{0}, {0}};
  auto res = verify_code(g, missing);
  CHECK_FALSE(res.pass);
}

TEST_CASE("n mismatch between code and graph is an input error") {
  auto code = build_clique_cover_code(fixtures::fig1());
  CHECK_THROWS_AS(verify_code(fixtures::cycle(4).as_side_info(), code), Error);
}

TEST_CASE("random trials replace exhaustion for long messages") {
  // n * t = 24 > 20 forces sampling; the built code still passes.
  Limits wide;
  wide.exact_limit = 24;
  auto g = fixtures::cycle(12).as_side_info();
  auto code = build_fractional_code(g, 2, wide);
  auto check = verify_code(g, code, 60, 7);
  CHECK(check.pass);
  CHECK_FALSE(check.exhaustive);
  CHECK(check.cases == 60);
  CHECK(check.seed == 7);
  CHECK_THROWS_AS(verify_code(g, code, 0, 7), Error);
}

TEST_CASE("built codes verify over random digraphs") {
  std::uint64_t seed = 1;
  for (int n = 2; n <= 10; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      auto g = random_digraph(n, p, seed++);
      auto code = build_clique_cover_code(g);
      CHECK(code_rate(code) == Rational(clique_cover_number(g).value));
      auto check = verify_code(g, code);
      CHECK(check.pass);
      CHECK(check.exhaustive);
    }
  }
}

TEST_CASE("b-fold rates never beat the LP optimum and weakly improve") {
  for (const auto& g : {fixtures::cycle(5).as_side_info(), fixtures::fig1(),
                        fixtures::cycle(7).as_side_info()}) {
    auto report = bounds_report(g);
    Rational rate1, best;
    for (int b = 1; b * g.n() <= 20 && b <= 4; ++b) {
      auto code = build_fractional_code(g, b);
      Rational rate = code_rate(code);
      CHECK(rate >= report.fractional);
      if (b == 1) rate1 = best = rate;
      CHECK(rate <= rate1);  // splitting never loses to the plain cover
      best = std::min(best, rate);
      CHECK(verify_code(g, code).pass);
    }
    // The LP denominators here all fit the tested folds.
    CHECK(best == report.fractional);
  }
}

TEST_CASE("code files round-trip") {
  auto g = fixtures::cycle(5).as_side_info();
  auto code = build_fractional_code(g, 2);
  auto text = serialize_code(code);
  auto back = parse_code(text);
  CHECK(back.n == code.n);
  CHECK(back.t == code.t);
  CHECK(back.transmissions == code.transmissions);
  CHECK(back.assignment == code.assignment);
  CHECK(serialize_code(back) == text);
}

TEST_CASE("code text format") {
  auto code = build_clique_cover_code(fixtures::fig1());
  CHECK(serialize_code(code) == "t 1\ns 1:1 2:1\ns 3:1\n");

  auto parsed = parse_code("# comment\nt 2\n\ns 1:1 2:1  # trailing\ns 1:2 2:2\n");
  CHECK(parsed.n == 2);
  CHECK(parsed.t == 2);
  CHECK(parsed.transmissions.size() == 2);
}

TEST_CASE("malformed code files are parse errors") {
  auto kind = [](const std::string& text) {
    try {
      parse_code(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind("s 1:1\n") == ErrorKind::Parse);             // slot before t
  CHECK(kind("t 1\nt 1\ns 1:1\n") == ErrorKind::Parse);   // duplicate t
  CHECK(kind("t 0\ns 1:1\n") == ErrorKind::Parse);        // bad t
  CHECK(kind("t 1\n") == ErrorKind::Parse);               // no slots
  CHECK(kind("t 1\ns\n") == ErrorKind::Parse);            // empty slot
  CHECK(kind("t 1\ns 1\n") == ErrorKind::Parse);          // not msg:part
  CHECK(kind("t 1\ns 1:x\n") == ErrorKind::Parse);        // non-numeric part
  CHECK(kind("t 1\ns 0:1\n") == ErrorKind::Parse);        // message below 1
  CHECK(kind("t 1\ns 1:2\n") == ErrorKind::Parse);        // part above t
  CHECK(kind("t 1\ns 1:1\ns 1:1\n") == ErrorKind::Parse); // duplicate part
  CHECK(kind("t 1\ns 2:1\n") == ErrorKind::Parse);        // message 1 missing
  CHECK(kind("t 2\ns 1:1\n") == ErrorKind::Parse);        // part 2 missing
  CHECK(kind("t 1 9\ns 1:1\n") == ErrorKind::Parse);      // trailing tokens
  CHECK(kind("q 1\n") == ErrorKind::Parse);               // unknown directive
  CHECK(kind("t 40\ns 1:1\n") == ErrorKind::Limit);       // fold count cap
  CHECK(parse_code("t 1\ns 1:1\n").n == 1);
}
