#include "doctest.h"
#include "helpers.hpp"
#include "raag/certify.hpp"
#include "raag/errors.hpp"

using namespace raag;
using fixtures::bc_edge;
using fixtures::word;

namespace {

SurfaceModel bc_edge_model(bool admissible = true) {
  const auto g = bc_edge();
  return SurfaceModel(g, {GenSet::of({g.gen("a"), g.gen("b"), g.gen("c")})}, admissible);
}

std::vector<Word> words(const std::vector<std::string>& texts, const DefiningGraph& g) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(word(t, g));
  return out;
}

Word power(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out = concat(out, w);
  return out;
}

}  // namespace

TEST_SUITE("cococheck") {
  TEST_CASE("<bca, babc> is certified") {
    const auto m = bc_edge_model();
    const auto cert = certify(m, words({"b c a", "b a b c"}, m.graph()));
    REQUIRE(cert.verdict == Verdict::certified);
    CHECK(cert.core.verified());
    CHECK(cert.ell == 3 * (cert.core.complex.vertex_count() + 1));
    CHECK(cert.elements_checked > 0);
    CHECK_FALSE(cert.witness.has_value());
    CHECK(cert.short_syllables);
    CHECK(cert.slope == Rational(1, static_cast<std::int64_t>(6 * cert.ell)));
    CHECK(cert.offset == Rational(-2));
  }

  TEST_CASE("<abc, cab, a^2bc> is refuted by a conjugate of a") {
    const auto m = bc_edge_model();
    const auto cert = certify(m, words({"a b c", "c a b", "a^2 b c"}, m.graph()));
    REQUIRE(cert.verdict == Verdict::refuted);
    REQUIRE(cert.witness_core.has_value());
    CHECK(supports(*cert.witness_core) == GenSet::of({m.graph().gen("a")}));
    CHECK_FALSE(cert.core.verified());
  }

  TEST_CASE("a cyclic subgroup on one generator is refuted") {
    const auto m = bc_edge_model();
    const auto cert = certify(m, words({"a"}, m.graph()));
    REQUIRE(cert.verdict == Verdict::refuted);
    CHECK(format_word(*cert.witness, m.graph()) == "a");
    CHECK(cert.core.verified());
  }

  TEST_CASE("a refutation among members of a verified core") {
    const auto m = bc_edge_model();
    // Both generators fill but their product's conjugate b c does not.
    const auto cert = certify(m, words({"a b c", "b c a^-1"}, m.graph()));
    REQUIRE(cert.verdict == Verdict::refuted);
    CHECK_FALSE(m.is_filling(supports(*cert.witness_core)));
  }

  TEST_CASE("exhausted budgets are inconclusive") {
    const auto g = fixtures::square4();
    const SurfaceModel m(g, {GenSet::of({g.gen("a"), g.gen("b")}), GenSet::of({g.gen("c"), g.gen("d")})}, true);
    CertifyOptions options;
    options.cell_budget = 50;
    options.enum_budget = 1000;
    const auto cert = certify(m, words({"a b", "c d"}, g), options);
    CHECK(cert.verdict == Verdict::inconclusive);
    CHECK(cert.ell == 0);
    CHECK_FALSE(cert.reason.empty());

    const auto f = bc_edge_model();
    CertifyOptions small_enum;
    small_enum.enum_budget = 10'000;
    const auto ex3 = certify(f, words({"a b c", "c b a", "a^2 b^2 c^2"}, f.graph()), small_enum);
    CHECK(ex3.core.verified());
    CHECK(ex3.verdict == Verdict::inconclusive);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(certify(bc_edge_model(false), words({"a b c"}, bc_edge())), ContractError);
    CHECK_THROWS_AS(certify(bc_edge_model(), {}), ContractError);
  }

  TEST_CASE("displacement lower bound") {
    const auto m = bc_edge_model();
    const auto cert = certify(m, words({"b c a", "b a b c"}, m.graph()));
    REQUIRE(cert.verdict == Verdict::certified);
    const Word h = word("b c a", m.graph());
    CHECK(displacement_lower_bound(cert, Word{}) == Rational(-2));
    CHECK(displacement_lower_bound(cert, power(h, static_cast<int>(4 * cert.ell))) == Rational(0));
    Rational previous(-3);
    for (int k = 0; k < 40; ++k) {
      const Rational r = displacement_lower_bound(cert, power(h, k));
      CHECK(r > previous);
      previous = r;
    }
    CHECK_THROWS_AS(displacement_lower_bound(cert, word("a", m.graph())), ContractError);
    const auto refuted = certify(m, words({"a"}, m.graph()));
    CHECK_THROWS_AS(displacement_lower_bound(refuted, word("a", m.graph())), ContractError);
  }

  TEST_CASE("certifying the extracted generators gives the same verdict") {
    const auto m = bc_edge_model();
    for (const auto& gens : {std::vector<std::string>{"b c a", "b a b c"}, std::vector<std::string>{"a"}}) {
      const auto cert = certify(m, words(gens, m.graph()));
      std::vector<Word> extracted;
      for (const auto& w : extract_generators(cert.core)) extracted.push_back(w.letters());
      CHECK(certify(m, extracted).verdict == cert.verdict);
    }
  }

  TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::certified) == "certified");
    CHECK(to_string(Verdict::refuted) == "refuted");
    CHECK(to_string(Verdict::inconclusive) == "inconclusive");
  }
}
