#include "raag/rotation_family.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <future>
#include <random>
#include <sstream>

#include "raag/errors.hpp"
#include "raag/normal_form.hpp"

namespace raag {
namespace {

int wrap(int i, int n) {
  const int r = ((i % n) + n) % n;
  return r == 0 ? n : r;
}

DefiningGraph rotation_graph(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("g" + std::to_string(i));
  auto f = [](int i) { return "f" + std::to_string(i); };
  auto g = [](int i) { return "g" + std::to_string(i); };
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      edges.emplace_back(f(i), f(j));
      edges.emplace_back(g(i), g(j));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != wrap(i - 1, n) && j != i) edges.emplace_back(f(i), g(j));
  return DefiningGraph(std::move(labels), edges);
}

SurfaceModel rotation_model(int n) {
  if (n < 2) throw InputError("the rotation family needs n >= 2");
  DefiningGraph graph = rotation_graph(n);
  const GenSet all = graph.all();
  return SurfaceModel(std::move(graph), {all}, true);
}

}  // namespace

RotationFamily::RotationFamily(int n, int N) : n_(n), big_n_(N), model_(rotation_model(n)) {
  if (N < 1) throw InputError("the rotation family needs N >= 1");
}

Gen RotationFamily::f(int i) const { return graph().gen("f" + std::to_string(wrap(i, n_))); }
Gen RotationFamily::g(int i) const { return graph().gen("g" + std::to_string(wrap(i, n_))); }

namespace {

enum class Piece { B, M, M_inverse, E };

struct Token {
  Piece piece;
  int exponent;
};

void emit(const Token& t, const RotationFamily& fam, NormalWord& out) {
  const int n = fam.n(), x = t.exponent;
  auto push = [&](Gen g, int e) { out.syllables.push_back(Syllable{g, e}); };
  switch (t.piece) {
    case Piece::B:
      for (int j = 1; j <= n - 1; ++j) push(fam.g(j), x);
      break;
    case Piece::M:
      push(fam.f(1), x);
      push(fam.g(n), x);
      break;
    case Piece::M_inverse:
      push(fam.g(n), -x);
      push(fam.f(1), -x);
      break;
    case Piece::E:
      for (int j = 2; j <= n; ++j) push(fam.f(j), x);
      break;
  }
}

}  // namespace

NormalWord RotationFamily::generator(int i) const {
  if (i < 1 || i > big_n_) throw InputError("generator index out of range");
  NormalWord w;
  for (Token t : {Token{Piece::B, i}, Token{Piece::M, i}, Token{Piece::E, i}}) emit(t, *this, w);
  return w;
}

std::vector<NormalWord> RotationFamily::generators() const {
  std::vector<NormalWord> out;
  for (int i = 1; i <= big_n_; ++i) out.push_back(generator(i));
  return out;
}

HWord parse_hword(std::string_view text, const RotationFamily& fam) {
  HWord out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const std::string name = token.substr(0, caret);
    int index = 0, power = 1;
    auto parse_int = [&](std::string_view s, int& value) {
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
    };
    if (name.size() < 2 || name[0] != 'w' || !parse_int(std::string_view(name).substr(1), index))
      throw InputError("bad subgroup letter '" + token + "'; expected w<i> or w<i>^k");
    if (index < 1 || index > fam.N())
      throw InputError("subgroup letter '" + token + "' outside w1..w" + std::to_string(fam.N()));
    if (caret != std::string::npos &&
        (!parse_int(std::string_view(token).substr(caret + 1), power) || power == 0 ||
         std::abs(power) > 1'000'000))
      throw InputError("bad exponent in '" + token + "'");
    for (int k = 0; k < std::abs(power); ++k) out.push_back(HLetter{index, power > 0 ? 1 : -1});
  }
  return out;
}

std::string format_hword(const HWord& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size();) {
    std::size_t j = i;
    while (j < h.size() && h[j] == h[i]) ++j;
    if (!out.empty()) out += ' ';
    out += "w" + std::to_string(h[i].index);
    const long power = static_cast<long>(j - i) * h[i].sign;
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

bool is_freely_reduced(const HWord& h) {
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i].index == h[i - 1].index && h[i].sign == -h[i - 1].sign) return false;
  return true;
}

Word naive_expansion(const HWord& h, const RotationFamily& fam) {
  Word out;
  for (const HLetter& x : h) {
    const Word w = fam.generator(x.index).letters();
    const Word piece = x.sign > 0 ? w : invert(w);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

NormalWord bme_normal_form(const HWord& h, const RotationFamily& fam) {
  if (!is_freely_reduced(h)) throw ContractError("bme_normal_form: word is not freely reduced");
  std::vector<Token> tokens;
  auto append = [&](Token t) {
    if (!tokens.empty() && tokens.back().piece == t.piece && (t.piece == Piece::B || t.piece == Piece::E))
      tokens.back().exponent += t.exponent;
    else
      tokens.push_back(t);
  };
  for (const HLetter& x : h) {
    if (x.index < 1 || x.index > fam.N()) throw InputError("subgroup letter out of range");
    const int i = x.index;
    if (x.sign > 0) {
      append({Piece::B, i});
      append({Piece::M, i});
      append({Piece::E, i});
    } else {
      append({Piece::E, -i});
      append({Piece::M_inverse, i});
      append({Piece::B, -i});
    }
  }
  NormalWord out;
  for (const Token& t : tokens) emit(t, fam, out);
  return out;
}

std::int64_t complement_diameter(const DefiningGraph& graph) {
  const auto gens = graph.generators();
  std::int64_t diameter = 0;
  for (Gen source : gens) {
    std::vector<std::int64_t> dist(gens.size(), -1);
    std::deque<Gen> queue{source};
    dist[source.id] = 0;
    while (!queue.empty()) {
      const Gen u = queue.front();
      queue.pop_front();
      for (Gen v : gens)
        if (v != u && !graph.adjacent(u, v) && dist[v.id] < 0) {
          dist[v.id] = dist[u.id] + 1;
          queue.push_back(v);
        }
    }
    for (auto d : dist) {
      if (d < 0) throw ContractError("complement_diameter: complement graph is disconnected");
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

FamilyConstants constants(const RotationFamily& fam) {
  FamilyConstants c;
  const std::int64_t n = fam.n(), N = fam.N();
  c.b = 3 * N * n + 4 * N;
  c.d = complement_diameter(fam.graph());
  c.L = c.d * c.b;
  c.ell_prime = c.b + 4 * c.L * N + 1;
  c.ell = c.ell_prime + 2 * N;
  return c;
}

SpanState alpha_state(const RotationFamily& fam) {
  return SpanState{GenSet::of({fam.g(0)}), GenSet::of({fam.f(0), fam.f(1)})};
}

SpanState span_apply(const SpanState& s, Gen z, const RotationFamily& fam) {
  if (s.misses.contains(z)) return s;
  if (s.contained_in.subset_of(fam.graph().neighbors(z))) return s;
  SpanState out{s.contained_in, GenSet{}};
  out.contained_in.insert(z);
  return out;
}

SpanState apply_word(const SpanState& s, const Word& w, const RotationFamily& fam) {
  SpanState out = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = span_apply(out, it->gen, fam);
  return out;
}

SpanState apply_hword(const SpanState& s, const HWord& h, const RotationFamily& fam) {
  return apply_word(s, naive_expansion(h, fam), fam);
}

bool is_proper(const SpanState& s, const RotationFamily& fam) { return s.contained_in != fam.graph().all(); }

GenSet x_bar(int k, const RotationFamily& fam) {
  GenSet s;
  for (int i = -k + 1; i < k; ++i) s.insert(fam.f(i));
  for (int j = -k + 1; j < k - 1; ++j) s.insert(fam.g(j));
  return s;
}

GenSet y_bar(int k, const RotationFamily& fam) {
  GenSet s;
  for (int i = -k + 1; i <= k; ++i) s.insert(fam.g(i));
  for (int j = -k + 2; j <= k; ++j) s.insert(fam.f(j));
  return s;
}

namespace {

std::vector<HLetter> alphabet(const RotationFamily& fam) {
  std::vector<HLetter> out;
  for (int i = 1; i <= fam.N(); ++i) {
    out.push_back({i, 1});
    out.push_back({i, -1});
  }
  return out;
}

}  // namespace

std::vector<HWord> reduced_hwords(const RotationFamily& fam, std::size_t min_len, std::size_t max_len) {
  const auto letters = alphabet(fam);
  std::vector<HWord> out, level{HWord{}};
  for (std::size_t len = 0;; ++len) {
    if (len >= min_len) out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<HWord> next;
    for (const HWord& w : level)
      for (const HLetter& x : letters) {
        if (!w.empty() && w.back().index == x.index && w.back().sign == -x.sign) continue;
        next.push_back(w);
        next.back().push_back(x);
      }
    level = std::move(next);
  }
  return out;
}

std::vector<HWord> random_hwords(const RotationFamily& fam, std::size_t count, std::size_t max_len,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto letters = alphabet(fam);
  std::vector<HWord> out;
  if (max_len == 0) return out;
  std::uniform_int_distribution<std::size_t> length(1, max_len), pick(0, letters.size() - 1);
  for (std::size_t c = 0; c < count; ++c) {
    HWord w;
    const std::size_t len = length(rng);
    while (w.size() < len) {
      const HLetter x = letters[pick(rng)];
      if (!w.empty() && w.back().index == x.index && w.back().sign == -x.sign) continue;
      w.push_back(x);
    }
    out.push_back(std::move(w));
  }
  return out;
}

StarReport verify_star(const RotationFamily& fam, int k_max, unsigned threads) {
  if (k_max < 0 || 2 * k_max > fam.n()) throw ContractError("verify_star: need 2 * k_max <= n");
  const auto words = reduced_hwords(fam, 0, static_cast<std::size_t>(k_max));
  const SpanState alpha = alpha_state(fam);
  threads = std::max(1u, threads);

  auto check_range = [&](std::size_t begin, std::size_t end) {
    StarReport r;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const HWord& h = words[idx];
      const SpanState s = apply_hword(alpha, h, fam);
      const int k = std::max<int>(static_cast<int>(h.size()), 2);
      ++r.checked;
      if (!is_proper(s, fam)) r.all_proper = false;
      if (!s.contained_in.subset_of(x_bar(k, fam)) && !s.contained_in.subset_of(y_bar(k, fam)))
        r.violations.push_back(StarViolation{h, s, k});
    }
    return r;
  };

  std::vector<std::future<StarReport>> jobs;
  const std::size_t chunk = (words.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < words.size(); begin += chunk)
    jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, check_range, begin,
                              std::min(words.size(), begin + chunk)));
  StarReport report;
  for (auto& job : jobs) {
    StarReport r = job.get();
    report.checked += r.checked;
    report.all_proper = report.all_proper && r.all_proper;
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
  }
  return report;
}

DisplacementBound displacement_upper(const HWord& h, const RotationFamily& fam) {
  HWord reduced;
  for (const HLetter& x : h) {
    if (!reduced.empty() && reduced.back().index == x.index && reduced.back().sign == -x.sign)
      reduced.pop_back();
    else
      reduced.push_back(x);
  }
  const std::int64_t n = fam.n();
  const auto len = static_cast<std::int64_t>(reduced.size());
  DisplacementBound out;
  out.m = (2 * len + n - 1) / n;
  const std::int64_t cap = n / 2;
  const std::int64_t blocks = std::max(out.m, (len + cap - 1) / cap);
  out.split_in_m = blocks == out.m;

  // Spread the letters as evenly as possible over the blocks.
  const SpanState alpha = alpha_state(fam);
  std::int64_t start = 0;
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t size = len / blocks + (b < len % blocks ? 1 : 0);
    if (size == 0) continue;
    HWord block(reduced.begin() + start, reduced.begin() + start + size);
    start += size;
    if (!is_proper(apply_hword(alpha, block, fam), fam)) out.blocks_proper = false;
    out.blocks.push_back(std::move(block));
  }
  out.bound = 2 * static_cast<std::int64_t>(out.blocks.size());
  out.linear_bound = Rational(4 * len, n) + 2;
  return out;
}

OrderWindowReport verify_order_window(const RotationFamily& fam, const std::vector<HWord>& sample) {
  const std::size_t L = static_cast<std::size_t>(constants(fam).L);
  OrderWindowReport report;
  for (std::size_t idx = 0; idx < sample.size(); ++idx) {
    const NormalWord w = bme_normal_form(sample[idx], fam);
    const SyllableOrder order = syllable_order(w, fam.graph());
    ++report.words;
    for (std::size_t i = 0; i < w.syllables.size(); ++i)
      for (std::size_t j = i + L + 1; j < w.syllables.size(); ++j) {
        ++report.pairs_checked;
        if (!order.comparable(i, j)) report.violations.emplace_back(idx, i, j);
      }
  }
  return report;
}

}  // namespace raag
