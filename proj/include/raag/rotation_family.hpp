#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "raag/certify.hpp"
#include "raag/graph.hpp"
#include "raag/surface_model.hpp"
#include "raag/word.hpp"

namespace raag {

/// The rotation family on a genus n+1 surface: generators f_i, g_i
/// (i mod n, labels "f1".."fn", "g1".."gn") where f_i fails to commute
/// exactly with g_{i-1} and g_i, and the subgroup <w_1, ..., w_N> with
///   w_i = (g_1^i ... g_{n-1}^i)(f_1^i g_n^i)(f_2^i ... f_n^i).
/// Only the full generator set fills.
class RotationFamily {
 public:
  /// Throws InputError unless n >= 2 and N >= 1.
  RotationFamily(int n, int N);

  int n() const { return n_; }
  int N() const { return big_n_; }
  const DefiningGraph& graph() const { return model_.graph(); }
  const SurfaceModel& model() const { return model_; }

  /// f_i and g_i with the index taken mod n.
  Gen f(int i) const;
  Gen g(int i) const;

  /// w_i for 1 <= i <= N as a normal word.
  NormalWord generator(int i) const;
  std::vector<NormalWord> generators() const;

 private:
  int n_;
  int big_n_;
  SurfaceModel model_;
};

/// A letter w_index^sign over the subgroup generators.
struct HLetter {
  int index = 1;
  int sign = 1;
  friend auto operator<=>(const HLetter&, const HLetter&) = default;
};
using HWord = std::vector<HLetter>;

/// Tokens "w<i>" or "w<i>^k" separated by whitespace. Throws InputError.
HWord parse_hword(std::string_view text, const RotationFamily& fam);
std::string format_hword(const HWord& h);

bool is_freely_reduced(const HWord& h);

/// Letter-by-letter expansion of h in the standard generators.
Word naive_expansion(const HWord& h, const RotationFamily& fam);

/// The BME normal form: each w_i written as B_i M_i E_i and each w_i^-1 as
/// E_-i M_i^-1 B_-i, merging E_i E_-j into E_{i-j} and B_-i B_j into
/// B_{j-i} at generator boundaries. Throws ContractError unless h is
/// freely reduced.
NormalWord bme_normal_form(const HWord& h, const RotationFamily& fam);

struct FamilyConstants {
  std::int64_t b = 0;            // 3Nn + 4N
  std::int64_t d = 0;            // diameter of the complement graph
  std::int64_t L = 0;            // d * b
  std::int64_t ell_prime = 0;    // b + 4LN + 1
  std::int64_t ell = 0;          // ell_prime + 2N
};

FamilyConstants constants(const RotationFamily& fam);

/// Breadth-first diameter of the complement of the graph.
std::int64_t complement_diameter(const DefiningGraph& graph);

/// What is known about a curve: it lies in the span of contained_in and
/// is disjoint from each subsurface in misses. Subsurfaces X_i and Y_i are
/// named by the generators f_i and g_i supported on them.
struct SpanState {
  GenSet contained_in;
  GenSet misses;
  friend bool operator==(const SpanState&, const SpanState&) = default;
};

/// The curve alpha in Y_0 disjoint from X_0 and X_1.
SpanState alpha_state(const RotationFamily& fam);

/// Effect of one generator supported on Z. A curve disjoint from Z, or
/// lying in a span all of whose pieces are disjoint from Z, is fixed;
/// otherwise Z joins the span and nothing is known to be missed.
SpanState span_apply(const SpanState& s, Gen z, const RotationFamily& fam);

/// Applies w to the curve; the rightmost letter acts first.
SpanState apply_word(const SpanState& s, const Word& w, const RotationFamily& fam);
SpanState apply_hword(const SpanState& s, const HWord& h, const RotationFamily& fam);

/// The span is a proper subsurface unless it uses every X_i and Y_i.
bool is_proper(const SpanState& s, const RotationFamily& fam);

/// Label sets of the subsurfaces X-bar_k and Y-bar_k:
///   X-bar_k = {X_i : -k < i < k} + {Y_j : -k < j < k-1}
///   Y-bar_k = {Y_i : -k < i <= k} + {X_j : -k+1 < j <= k}
GenSet x_bar(int k, const RotationFamily& fam);
GenSet y_bar(int k, const RotationFamily& fam);

/// Every freely reduced word over w_1^{+-1}..w_N^{+-1} with length in
/// [min_len, max_len], in shortlex order with w_1 < w_1^-1 < w_2 < ...
std::vector<HWord> reduced_hwords(const RotationFamily& fam, std::size_t min_len, std::size_t max_len);

/// Uniformly chosen freely reduced words of each length 1..max_len.
std::vector<HWord> random_hwords(const RotationFamily& fam, std::size_t count, std::size_t max_len,
                                 std::uint64_t seed);

struct StarViolation {
  HWord h;
  SpanState state;
  int k;
};

struct StarReport {
  std::size_t checked = 0;
  bool all_proper = true;
  std::vector<StarViolation> violations;
};

/// For every reduced h with |h| <= k_max, checks that h alpha lies in
/// X-bar_k or Y-bar_k for k = max(|h|, 2) and that its span is proper.
/// Throws ContractError when 2 k_max > n.
StarReport verify_star(const RotationFamily& fam, int k_max, unsigned threads = 1);

struct DisplacementBound {
  /// Largest integer below |h| * 2/n + 1.
  std::int64_t m = 0;
  std::vector<HWord> blocks;
  /// 2 * blocks.size(), an upper bound on d(alpha, h alpha).
  std::int64_t bound = 0;
  /// |h| * 4/(g-1) + 2 with g = n + 1.
  Rational linear_bound;
  bool blocks_proper = true;
  /// Whether m blocks of length <= n/2 sufficed. Can fail for odd n, in
  /// which case blocks.size() exceeds m.
  bool split_in_m = true;
};

/// Splits h into blocks of length at most floor(n/2), certifies each block
/// by properness of its span, and sums the per-block bound of 2.
DisplacementBound displacement_upper(const HWord& h, const RotationFamily& fam);

struct OrderWindowReport {
  std::size_t words = 0;
  std::size_t pairs_checked = 0;
  /// (word index, first syllable, second syllable) for unordered pairs.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> violations;
};

/// In each BME normal form, syllables with at least L others between them
/// must be comparable in the syllable order.
OrderWindowReport verify_order_window(const RotationFamily& fam, const std::vector<HWord>& sample);

}  // namespace raag
