#include "raag/certify.hpp"

#include <map>

#include "raag/errors.hpp"
#include "raag/normal_form.hpp"

namespace raag {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

class FillingMemo {
 public:
  explicit FillingMemo(const SurfaceModel& model) : model_(model) {}

  // Returns the cyclic reduction when it does not fill.
  std::optional<NormalWord> non_filling_core(const NormalWord& h) {
    NormalWord core = cyclically_reduce(h.letters(), model_.graph()).core;
    const GenSet support = supports(core);
    auto [it, inserted] = memo_.try_emplace(support, false);
    if (inserted) it->second = model_.is_filling(support);
    if (it->second) return std::nullopt;
    return core;
  }

 private:
  const SurfaceModel& model_;
  std::map<GenSet, bool> memo_;
};

}  // namespace

Certificate certify(const SurfaceModel& model, const std::vector<Word>& generators,
                    CertifyOptions options) {
  if (!model.admissible()) throw ContractError("certify: the surface model is not declared admissible");
  if (generators.empty()) throw ContractError("certify: no generators");

  CoreOptions core_options;
  core_options.cell_budget = options.cell_budget;
  Certificate cert{.model = model,
                   .generators = generators,
                   .core = build_core(model.graph(), generators, core_options)};
  FillingMemo memo(model);
  const EnumerationOptions enumeration{options.enum_budget, options.threads};

  if (!cert.core.verified()) {
    // Lengths grow geometrically until the node budget gives out.
    const std::size_t cap = 3 * (cert.core.complex.vertex_count() + 1);
    for (std::size_t len = 1;; len = std::min(cap, 2 * len)) {
      std::vector<NormalWord> loops;
      try {
        loops = enumerate_loops(cert.core, len, enumeration);
      } catch (const ResourceError&) {
        break;
      }
      for (const NormalWord& h : loops) {
        if (h.empty()) continue;
        if (auto core = memo.non_filling_core(h)) {
          cert.verdict = Verdict::refuted;
          cert.reason = "core construction exceeded the cell budget; a loop of the partial complex does not fill";
          cert.witness = h;
          cert.witness_core = std::move(core);
          return cert;
        }
      }
      if (len == cap) break;
    }
    cert.verdict = Verdict::inconclusive;
    cert.reason = "core construction exceeded the cell budget of " + std::to_string(options.cell_budget) + " cells";
    return cert;
  }

  cert.ell = 3 * (cert.core.complex.vertex_count() + 1);
  std::vector<NormalWord> members;
  try {
    members = enumerate_elements(cert.core, cert.ell, enumeration);
  } catch (const ResourceError& e) {
    cert.verdict = Verdict::inconclusive;
    cert.reason = "enumeration up to length " + std::to_string(cert.ell) + " exceeded the node budget (" +
                  std::to_string(e.partial()) + " elements found)";
    return cert;
  }
  for (const NormalWord& h : members) {
    if (h.empty()) continue;
    ++cert.elements_checked;
    if (3 * static_cast<std::size_t>(max_exponent(h)) >= cert.ell) cert.short_syllables = false;
    if (auto core = memo.non_filling_core(h)) {
      cert.verdict = Verdict::refuted;
      cert.reason = "a member of length at most ell does not fill";
      cert.witness = h;
      cert.witness_core = std::move(core);
      return cert;
    }
  }
  cert.verdict = Verdict::certified;
  cert.reason = "every member of length at most ell fills";
  cert.slope = Rational(1, static_cast<std::int64_t>(6 * cert.ell));
  cert.offset = Rational(-2);
  return cert;
}

Rational displacement_lower_bound(const Certificate& cert, const Word& h) {
  if (cert.verdict != Verdict::certified)
    throw ContractError("displacement_lower_bound: certificate is not certified");
  if (!membership(cert.core, h)) throw ContractError("displacement_lower_bound: word is not a member");
  const auto length = static_cast<std::int64_t>(normalize(h, cert.model.graph()).length());
  return Rational(length) * cert.slope + cert.offset;
}

}  // namespace raag
