#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "raag/core.hpp"
#include "raag/surface_model.hpp"

namespace raag {

using Rational = boost::rational<std::int64_t>;

enum class Verdict { certified, refuted, inconclusive };

std::string to_string(Verdict v);

struct CertifyOptions {
  std::size_t cell_budget = 200'000;
  /// Search-node budget for enumerating members of H.
  std::size_t enum_budget = 20'000'000;
  unsigned threads = 1;
};

struct Certificate {
  SurfaceModel model;
  std::vector<Word> generators;
  SubgroupCore core;
  /// 3(V + 1) for the core's vertex count V; 0 when the core did not stabilize.
  std::size_t ell = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string reason{};
  /// A member of H whose cyclic reduction does not fill, and that reduction.
  std::optional<NormalWord> witness{};
  std::optional<NormalWord> witness_core{};
  std::size_t elements_checked = 0;
  /// Every checked element had all exponents below ell / 3.
  bool short_syllables = true;
  /// The displacement bound d >= |h| * slope + offset, set when certified.
  Rational slope{0};
  Rational offset{0};
};

/// Builds the core of <generators>; when it stabilizes, checks that every
/// h in H with |h| <= ell fills. A core that runs out of budget can still
/// refute: its loops lie in H, so a non-filling loop is a genuine witness.
/// Throws ContractError for a model not declared admissible or an empty
/// generator list.
Certificate certify(const SurfaceModel& model, const std::vector<Word>& generators,
                    CertifyOptions options = {});

/// |h| / (6 ell) - 2. Throws ContractError unless the certificate is
/// certified and h is a member.
Rational displacement_lower_bound(const Certificate& cert, const Word& h);

}  // namespace raag
