#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "raag/errors.hpp"
#include "raag/rotation_family.hpp"
#include "raag/surface_model.hpp"

using namespace raag;
using fixtures::bc_edge;
using fixtures::syllables;
using fixtures::word;

namespace {

SurfaceModel bc_edge_model() {
  const auto g = bc_edge();
  return SurfaceModel(g, {GenSet::of({g.gen("a"), g.gen("b"), g.gen("c")})}, true);
}

// The 4-cycle a-b-c-d-a; {a,c} and {b,d} fill.
SurfaceModel square_model() {
  const auto g = fixtures::square4();
  return SurfaceModel(g, {GenSet::of({g.gen("a"), g.gen("c")}), GenSet::of({g.gen("b"), g.gen("d")})}, true);
}

std::vector<FillingBlock> brute_blocks(const NormalWord& w, const SurfaceModel& m) {
  auto fills_range = [&](std::size_t i, std::size_t j) {
    GenSet s;
    for (std::size_t k = i; k <= j; ++k) s.insert(w.syllables[k].gen);
    return m.is_filling(s);
  };
  std::vector<FillingBlock> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i; j < w.size(); ++j) {
      if (!fills_range(i, j)) continue;
      const bool shrinks = (j > i && (fills_range(i + 1, j) || fills_range(i, j - 1)));
      if (!shrinks) out.push_back(FillingBlock{i, j});
    }
  return out;
}

bool brute_window(const NormalWord& w, std::size_t ell, const SurfaceModel& m) {
  std::vector<std::size_t> start{0};
  for (const auto& s : w.syllables) start.push_back(start.back() + static_cast<std::size_t>(std::abs(s.exponent)));
  const std::size_t len = start.back();
  if (len < ell) return true;
  const auto blocks = brute_blocks(w, m);
  for (std::size_t a = 0; a + ell <= len; ++a) {
    bool found = false;
    for (const auto& b : blocks)
      if (start[b.first] >= a && start[b.last + 1] <= a + ell) found = true;
    if (!found) return false;
  }
  return true;
}

NormalWord random_normal(const DefiningGraph& g, std::size_t syllable_count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(1, 3);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> gen(0, g.size() - 1);
  Word w;
  for (std::size_t i = 0; i < syllable_count; ++i) {
    const Gen x{static_cast<std::uint16_t>(gen(rng))};
    const int e = exp(rng), sign = coin(rng) ? 1 : -1;
    for (int k = 0; k < e; ++k) w.push_back(Letter{x, sign});
  }
  return normalize(w, g);
}

}  // namespace

TEST_SUITE("surface-model") {
  TEST_CASE("model validation") {
    const auto g = bc_edge();
    const Gen a = g.gen("a"), b = g.gen("b"), c = g.gen("c");
    CHECK_THROWS_AS(SurfaceModel(g, {GenSet::of({a})}, true), InputError);
    CHECK_THROWS_AS(SurfaceModel(g, {GenSet{}}, true), InputError);
    CHECK_THROWS_AS(SurfaceModel(g, {GenSet::of({a, b}), GenSet::of({a, b, c})}, true), InputError);
    CHECK_THROWS_AS(SurfaceModel(g, {GenSet(std::uint64_t{1} << 9)}, true), InputError);
    CHECK_NOTHROW(SurfaceModel(g, {GenSet::of({a, b}), GenSet::of({a, c})}, false));
  }

  TEST_CASE("filling is the upward closure of the minimal sets") {
    const auto m = square_model();
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      const GenSet s(bits);
      const bool expected = (bits & 0b0101) == 0b0101 || (bits & 0b1010) == 0b1010;
      CHECK(m.is_filling(s) == expected);
    }
  }

  TEST_CASE("supports") {
    const auto g = bc_edge();
    CHECK(supports(syllables("b c a", g)) == g.all());
    CHECK(supports(NormalWord{}).empty());
    for (const Word& w : oracle::normal_words(g, 6)) {
      const auto expected = supports(to_syllables(w));
      for (const auto& rep : min_class(w, g)) REQUIRE(supports(rep) == expected);
    }
  }

  TEST_CASE("fills uses the cyclic reduction") {
    const auto g = bc_edge();
    const auto m = bc_edge_model();
    CHECK(fills(syllables("b c a", g), m));
    CHECK_FALSE(fills(syllables("a", g), m));
    CHECK_FALSE(fills(syllables("b a b^-1", g), m));
    CHECK_FALSE(fills(syllables("c a c^-1", g), m));
    CHECK(fills(syllables("b a c b^-1 a", g), m));
    CHECK_FALSE(fills(NormalWord{}, m));
  }

  TEST_CASE("subs of abca and acba agree") {
    const auto g = bc_edge();
    const auto s = subs(syllables("a b c a", g), g);
    REQUIRE(s.size() == 4);
    const std::vector<std::pair<std::string, std::string>> expected{{"", "a"}, {"a", "b"}, {"a b", "c"}, {"a b c", "a"}};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(format_word(s[i].prefix, g) == expected[i].first);
      CHECK(g.label(s[i].base) == expected[i].second);
    }
    CHECK(same_family(s, subs(syllables("a c b a", g), g), g));
    CHECK_FALSE(same_family(s, subs(syllables("a b c b", g), g), g));
    const auto single = subs(syllables("a", g), g);
    REQUIRE(single.size() == 1);
    CHECK(single[0].prefix.empty());
    CHECK(single[0].base == g.gen("a"));
  }

  TEST_CASE("subs families are representative-independent and injective") {
    for (const auto& g : {bc_edge(), fixtures::path4()}) {
      for (const Word& w : oracle::normal_words(g, 5)) {
        const NormalWord nf = to_syllables(w);
        const auto family = subs(nf, g);
        REQUIRE(family.size() == nf.size());
        for (std::size_t i = 0; i < family.size(); ++i)
          for (std::size_t j = i + 1; j < family.size(); ++j)
            REQUIRE_FALSE(same_subsurface(family[i], family[j], g));
        for (const auto& rep : min_class(w, g)) REQUIRE(same_family(family, subs(rep, g), g));
      }
    }
  }

  TEST_CASE("same_subsurface compares prefixes modulo the star") {
    const auto g = bc_edge();
    const SymbolicSubsurface x{syllables("b", g), g.gen("c")};
    const SymbolicSubsurface y{NormalWord{}, g.gen("c")};
    const SymbolicSubsurface z{syllables("a", g), g.gen("c")};
    CHECK(same_subsurface(x, y, g));
    CHECK_FALSE(same_subsurface(z, y, g));
    CHECK_FALSE(same_subsurface(SymbolicSubsurface{NormalWord{}, g.gen("b")}, y, g));
  }

  TEST_CASE("filling blocks") {
    const auto g = bc_edge();
    const auto m = bc_edge_model();
    const auto whole = find_filling_blocks(syllables("a b c", g), m);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == FillingBlock{0, 2});
    CHECK(find_filling_blocks(syllables("a b a", g), m).empty());
    const auto two = find_filling_blocks(syllables("a b c a", g), m);
    CHECK(two == std::vector<FillingBlock>{{0, 2}, {1, 3}});
  }

  TEST_CASE("a rotation-family generator is a single filling block") {
    const RotationFamily fam(3, 1);
    const NormalWord w = fam.generator(1);
    const auto blocks = find_filling_blocks(w, fam.model());
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == FillingBlock{0, w.size() - 1});
  }

  TEST_CASE("filling blocks and windows match brute force") {
    std::mt19937_64 rng(99);
    for (const auto& m : {bc_edge_model(), square_model()}) {
      for (int trial = 0; trial < 300; ++trial) {
        const NormalWord w = random_normal(m.graph(), 1 + trial % 20, rng);
        REQUIRE(find_filling_blocks(w, m) == brute_blocks(w, m));
        for (std::size_t ell = 1; ell <= 14; ++ell) REQUIRE(check_window_property(w, ell, m) == brute_window(w, ell, m));
      }
    }
  }

  TEST_CASE("window property") {
    const auto g = bc_edge();
    const auto m = bc_edge_model();
    CHECK(check_window_property(syllables("a b", g), 5, m));
    CHECK(check_window_property(syllables("a b c a b c", g), 3, m));
    CHECK_FALSE(check_window_property(syllables("a b c a^10 b c", g), 6, m));
    CHECK(check_window_property(syllables("a b c a^10 b c", g), 13, m));
    CHECK_THROWS_AS(check_window_property(syllables("a", g), 0, m), ContractError);
  }

  TEST_CASE("max exponent") {
    const auto g = bc_edge();
    CHECK(max_exponent(syllables("a^3 b", g)) == 3);
    CHECK(max_exponent(syllables("a^-4 b", g)) == 4);
    CHECK(max_exponent(NormalWord{}) == 0);
    const RotationFamily fam(4, 3);
    for (int i = 1; i <= 3; ++i) CHECK(max_exponent(fam.generator(i)) == i);
  }
}
