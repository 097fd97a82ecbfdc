#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "raag/errors.hpp"
#include "raag/normal_form.hpp"
#include "raag/rotation_family.hpp"

using namespace raag;

namespace {

// w_i written through the rotation: (rho g0^i f0^i)^n equals
// prod_{k=1..n} g_k^i f_k^i after pushing each rho to the right.
Word rotation_expansion(const RotationFamily& fam, int i) {
  Word out;
  for (int k = 1; k <= fam.n(); ++k) {
    for (int e = 0; e < i; ++e) out.push_back(Letter{fam.g(k), 1});
    for (int e = 0; e < i; ++e) out.push_back(Letter{fam.f(k), 1});
  }
  return out;
}

// X_j is named by f_j and Y_j by g_j.
GenSet span_of(const RotationFamily& fam, std::initializer_list<std::pair<char, int>> names) {
  GenSet s;
  for (auto [kind, j] : names) s.insert(kind == 'X' ? fam.f(j) : fam.g(j));
  return s;
}

HWord h(std::initializer_list<int> letters) {
  HWord out;
  for (int x : letters) out.push_back(HLetter{std::abs(x), x > 0 ? 1 : -1});
  return out;
}

}  // namespace

TEST_SUITE("rotation-family") {
  TEST_CASE("family construction") {
    CHECK_THROWS_AS(RotationFamily(1, 1), InputError);
    CHECK_THROWS_AS(RotationFamily(3, 0), InputError);
    for (int n = 2; n <= 10; ++n) {
      const RotationFamily fam(n, 2);
      const auto& g = fam.graph();
      CHECK(g.size() == static_cast<std::size_t>(2 * n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const bool non_edge = (j == i || (j + 1) % n == i % n);
          CHECK(g.adjacent(fam.f(i), fam.g(j)) == !non_edge);
          if (i != j) {
            CHECK(g.adjacent(fam.f(i), fam.f(j)));
            CHECK(g.adjacent(fam.g(i), fam.g(j)));
          }
        }
      CHECK(complement_diameter(g) == n);
      CHECK(constants(fam).d == n);
      CHECK(fam.f(0) == fam.f(n));
      CHECK(g.label(fam.f(1)) == "f1");
      CHECK(g.label(fam.g(n)) == "g" + std::to_string(n));
    }
  }

  TEST_CASE("generators") {
    const RotationFamily fam(3, 1);
    CHECK(format_word(fam.generator(1), fam.graph()) == "g1 g2 f1 g3 f2 f3");
    CHECK_THROWS(fam.generator(2));
    const RotationFamily big(5, 3);
    for (int i = 1; i <= 3; ++i) {
      const NormalWord w = big.generator(i);
      CHECK(is_normal(w, big.graph()));
      CHECK(supports(w) == big.graph().all());
      CHECK(fills(w, big.model()));
      CHECK(max_exponent(w) == i);
    }
  }

  TEST_CASE("the BME form of w_i matches the rotation expansion") {
    for (int n = 3; n <= 5; ++n) {
      const RotationFamily fam(n, 3);
      for (int i = 1; i <= 3; ++i) {
        const NormalWord bme = bme_normal_form(h({i}), fam);
        CHECK(is_normal(bme, fam.graph()));
        CHECK(bme == fam.generator(i));
        CHECK(canonical(bme, fam.graph()) == normalize(rotation_expansion(fam, i), fam.graph()));
      }
    }
  }

  TEST_CASE("w1 w2^-1 merges the E pieces") {
    const RotationFamily fam(3, 2);
    const NormalWord bme = bme_normal_form(h({1, -2}), fam);
    // B1 M1 E_{-1} M2^-1 B2^-1
    CHECK(format_word(bme, fam.graph()) == "g1 g2 f1 g3 f2^-1 f3^-1 g3^-2 f1^-2 g1^-2 g2^-2");
    CHECK(is_normal(bme, fam.graph()));
    CHECK(canonical(bme, fam.graph()) == normalize(naive_expansion(h({1, -2}), fam), fam.graph()));
  }

  TEST_CASE("BME forms equal the normalized naive expansion") {
    for (int n = 3; n <= 4; ++n)
      for (int N = 1; N <= 2; ++N) {
        const RotationFamily fam(n, N);
        for (const HWord& x : reduced_hwords(fam, 0, 3)) {
          const NormalWord bme = bme_normal_form(x, fam);
          REQUIRE(is_normal(bme, fam.graph()));
          const NormalWord naive = normalize(naive_expansion(x, fam), fam.graph());
          REQUIRE(canonical(bme, fam.graph()) == naive);
          REQUIRE(bme.length() == naive.length());
        }
      }
    const RotationFamily fam(5, 3);
    for (const HWord& x : random_hwords(fam, 40, 8, 17))
      REQUIRE(canonical(bme_normal_form(x, fam), fam.graph()) == normalize(naive_expansion(x, fam), fam.graph()));
  }

  TEST_CASE("BME needs freely reduced input") {
    const RotationFamily fam(3, 2);
    CHECK_THROWS_AS(bme_normal_form(h({1, -1}), fam), ContractError);
    CHECK_FALSE(is_freely_reduced(h({2, 1, -1})));
    CHECK(is_freely_reduced(h({1, 2, -1})));
  }

  TEST_CASE("subgroup word syntax") {
    const RotationFamily fam(3, 2);
    const HWord x = parse_hword("w1 w2^-2 w1^+1", fam);
    CHECK(x == h({1, -2, -2, 1}));
    CHECK(format_hword(x) == "w1 w2^-2 w1");
    CHECK(parse_hword("", fam).empty());
    CHECK_THROWS_AS(parse_hword("w3", fam), InputError);
    CHECK_THROWS_AS(parse_hword("v1", fam), InputError);
    CHECK_THROWS_AS(parse_hword("w1^0", fam), InputError);
    CHECK_THROWS_AS(parse_hword("w1^x", fam), InputError);
  }

  TEST_CASE("word listings") {
    const RotationFamily fam(3, 2);
    const auto all = reduced_hwords(fam, 0, 3);
    CHECK(all.size() == 1 + 4 + 12 + 36);
    CHECK(reduced_hwords(fam, 2, 2).size() == 12);
    auto ranks = [](const HWord& x) {
      std::vector<int> r;
      for (const auto& l : x) r.push_back(2 * l.index + (l.sign > 0 ? 0 : 1));
      return r;
    };
    for (std::size_t i = 1; i < all.size(); ++i) {
      CHECK(all[i - 1].size() <= all[i].size());
      if (all[i - 1].size() == all[i].size()) CHECK(ranks(all[i - 1]) < ranks(all[i]));
    }
    const auto sample = random_hwords(fam, 10, 6, 1);
    CHECK(sample == random_hwords(fam, 10, 6, 1));
    for (const auto& x : sample) {
      CHECK(is_freely_reduced(x));
      CHECK(x.size() >= 1);
      CHECK(x.size() <= 6);
    }
  }

  TEST_CASE("constants") {
    const auto c = constants(RotationFamily(3, 2));
    CHECK(c.b == 26);
    CHECK(c.d == 3);
    CHECK(c.L == 78);
    CHECK(c.ell_prime == 651);
    CHECK(c.ell == 655);
    const auto small = constants(RotationFamily(2, 1));
    CHECK(small.b == 10);
    CHECK(small.d == 2);
    CHECK(small.L == 20);
    CHECK(small.ell_prime == 91);
    CHECK(small.ell == 93);
  }

  TEST_CASE("spans of short words stay inside the tabulated spans") {
    const RotationFamily fam(6, 2);
    const SpanState alpha = alpha_state(fam);
    CHECK(alpha.contained_in == span_of(fam, {{'Y', 0}}));
    CHECK(alpha.misses == span_of(fam, {{'X', 0}, {'X', 1}}));
    for (int i = 1; i <= 2; ++i) {
      auto span = [&](std::initializer_list<int> letters) {
        HWord x;
        for (int s : letters) x.push_back(HLetter{i, s});
        return apply_hword(alpha, x, fam).contained_in;
      };
      CHECK(span({-1}).subset_of(span_of(fam, {{'X', 0}, {'Y', 0}})));
      CHECK(span({1}).subset_of(span_of(fam, {{'Y', 0}, {'X', 1}, {'Y', 1}})));
      CHECK(span({1, 1}).subset_of(
          span_of(fam, {{'Y', -1}, {'X', 0}, {'Y', 0}, {'X', 1}, {'Y', 1}, {'X', 2}, {'Y', 2}})));
      CHECK(span({-1, -1}).subset_of(span_of(fam, {{'X', -1}, {'Y', -1}, {'X', 0}, {'Y', 0}, {'X', 1}})));
    }
    // Mixed generators: w_1 v_2 and v_1 w_2.
    CHECK(apply_hword(alpha, h({1, -2}), fam)
              .contained_in.subset_of(span_of(fam, {{'Y', -1}, {'X', 0}, {'Y', 0}, {'X', 1}, {'Y', 1}})));
    CHECK(apply_hword(alpha, h({-1, 2}), fam)
              .contained_in.subset_of(span_of(fam, {{'X', 0}, {'Y', 0}, {'X', 1}, {'Y', 1}, {'X', 2}})));
  }

  TEST_CASE("span rule") {
    const RotationFamily fam(6, 2);
    const SpanState bar2{x_bar(2, fam), GenSet{}};
    CHECK(bar2.contained_in == span_of(fam, {{'X', -1}, {'X', 0}, {'X', 1}, {'Y', -1}, {'Y', 0}}));
    NormalWord b1;
    for (int k = 1; k <= 5; ++k) b1.syllables.push_back(Syllable{fam.g(k), 1});
    const SpanState moved = apply_word(bar2, b1.letters(), fam);
    CHECK(moved.contained_in == (bar2.contained_in | span_of(fam, {{'Y', -2}, {'Y', 1}})));
    // Generators whose support is already in the span change nothing.
    const SpanState inside = span_apply(bar2, fam.f(0), fam);
    CHECK(inside == bar2);
    // A missed support is ignored.
    CHECK(span_apply(alpha_state(fam), fam.f(1), fam) == alpha_state(fam));
  }

  TEST_CASE("spans never shrink and properness only gets lost") {
    const RotationFamily fam(5, 2);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = fixtures::random_word(fam.graph(), 30, rng);
      SpanState s = alpha_state(fam);
      bool proper = true;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const SpanState next = span_apply(s, it->gen, fam);
        REQUIRE(s.contained_in.subset_of(next.contained_in));
        if (!proper) REQUIRE_FALSE(is_proper(next, fam));
        proper = is_proper(next, fam);
        s = next;
      }
      REQUIRE(s == apply_word(alpha_state(fam), w, fam));
    }
  }

  TEST_CASE("X-bar and Y-bar") {
    for (int n = 4; n <= 8; ++n) {
      const RotationFamily fam(n, 1);
      for (int k = 2; 2 * k <= n; ++k) {
        CHECK(is_proper(SpanState{x_bar(k, fam), {}}, fam));
        CHECK(is_proper(SpanState{y_bar(k, fam), {}}, fam));
      }
      CHECK(x_bar(n, fam) == fam.graph().all());
      CHECK(y_bar(n, fam) == fam.graph().all());
    }
  }

  TEST_CASE("spans of short words lie in X-bar or Y-bar") {
    const RotationFamily fam(6, 2);
    const auto report = verify_star(fam, 3, 2);
    CHECK(report.checked == 1 + 4 + 12 + 36);
    CHECK(report.violations.empty());
    CHECK(report.all_proper);
    CHECK_THROWS_AS(verify_star(fam, 4), ContractError);
    const auto wide = verify_star(RotationFamily(8, 1), 4);
    CHECK(wide.violations.empty());
    CHECK(wide.all_proper);
  }

  TEST_CASE("displacement bounds") {
    const RotationFamily fam(6, 2);
    auto three = displacement_upper(h({1, -2, 1}), fam);
    CHECK(three.m == 1);
    CHECK(three.bound == 2);
    const auto seven = displacement_upper(h({1, 2, 1, -2, 1, 1, 2}), fam);
    CHECK(seven.m == 3);
    CHECK(seven.bound == 6);
    CHECK(seven.linear_bound == Rational(20, 3));
    CHECK(seven.blocks.size() == 3);
    const auto empty = displacement_upper(HWord{}, fam);
    CHECK(empty.m <= 1);
    CHECK(empty.bound <= 2);
    for (const HWord& x : random_hwords(fam, 30, 12, 4)) {
      const auto d = displacement_upper(x, fam);
      CHECK(d.blocks_proper);
      CHECK(d.split_in_m);
      CHECK(Rational(d.bound) <= d.linear_bound);
      CHECK(d.bound == 2 * d.m);
      HWord joined;
      for (const auto& block : d.blocks) {
        CHECK(2 * block.size() <= 6);
        joined.insert(joined.end(), block.begin(), block.end());
      }
      CHECK(joined == x);
    }
  }

  TEST_CASE("odd n can need more than m blocks") {
    const RotationFamily fam(5, 1);
    const auto d = displacement_upper(h({1, 1, 1, 1, 1}), fam);
    // m = 2 but blocks hold at most 2 letters.
    CHECK(d.m == 2);
    CHECK(d.blocks.size() == 3);
    CHECK_FALSE(d.split_in_m);
    CHECK(d.blocks_proper);
  }

  TEST_CASE("translation length of w1") {
    const RotationFamily fam(6, 1);
    for (int p = 0; p <= 3; ++p) {
      HWord x(static_cast<std::size_t>(p), HLetter{1, 1});
      CHECK(is_proper(apply_hword(alpha_state(fam), x, fam), fam));
    }
    CHECK(displacement_upper(HWord(30, HLetter{1, 1}), fam).bound <= 20 + 2);
  }

  TEST_CASE("filling-block windows") {
    for (int n = 3; n <= 4; ++n)
      for (int N = 1; N <= 2; ++N) {
        const RotationFamily fam(n, N);
        const auto c = constants(fam);
        for (const HWord& x : reduced_hwords(fam, 1, 3)) {
          const NormalWord w = bme_normal_form(x, fam);
          REQUIRE(check_window_property(w, static_cast<std::size_t>(c.b), fam.model()));
          REQUIRE(check_window_property(w, static_cast<std::size_t>(c.ell), fam.model()));
        }
      }
  }

  TEST_CASE("order window") {
    const RotationFamily fam(3, 1);
    const auto report = verify_order_window(fam, {h({1, 1, 1, 1})});
    CHECK(report.words == 1);
    CHECK(report.violations.empty());
    CHECK(verify_order_window(fam, {h({1})}).pairs_checked == 0);
    const RotationFamily two(3, 2);
    CHECK(verify_order_window(two, random_hwords(two, 20, 4, 9)).violations.empty());
  }
}
