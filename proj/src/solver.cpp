#include "bicolor/solver.hpp"

#include "bicolor/embedded_data.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace bicolor::gcc {

namespace {

constexpr std::array<std::string_view, pair_count> names = {"1a", "2a", "2b", "3b", "4b", "4c", "5c"};
constexpr std::array<int, pair_count> alphas = {1, 2, 2, 3, 4, 4, 5};
constexpr std::array<int, pair_count> betas = {0, 0, 1, 1, 1, 2, 2};
constexpr std::array<int, pair_count> weights = {6, 4, 2, 6, 2, 4, 6};

constexpr int star_size = 5;
constexpr int max_x = 21;

std::uint64_t splitmix64(std::uint64_t z)
{
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t zobrist(std::size_t edge, int code)
{
  return splitmix64(edge * pair_count + static_cast<std::uint64_t>(code));
}

// Remaining multiplicities, one byte per pair code, biased by 0x80 so that an
// overdrawn counter shows as a cleared high bit.
constexpr std::uint64_t load_bias = 0x0080808080808080ull;

constexpr std::uint64_t initial_load()
{
  std::uint64_t v = load_bias;
  for (int c = 0; c < pair_count; ++c)
    v += std::uint64_t(weights[c]) << (8 * c);
  return v;
}

std::optional<int> ansatz_code(int tag)
{
  switch (tag) {
  case 1:
    return 0;
  case 3:
    return 3;
  case 5:
    return 6;
  default:
    return std::nullopt;
  }
}

bool is_ansatz_code(int code)
{
  return code == 0 || code == 3 || code == 6;
}

int tag_to_level(int tag)
{
  if (tag < 1 || tag > 5)
    throw std::invalid_argument("w-color out of range: " + std::to_string(tag));
  return tag - 1;
}

struct StarOption
{
  std::array<std::uint8_t, star_size> codes{};
  std::uint64_t letters = 0; // bit 3x+beta for each X-neighbour
  std::uint64_t load = 0;
  std::uint64_t zob = 0;
};

// Codes whose symbol also occurs with another letter (2a 2b 4b 4c). Every
// star uses 1a, 3b and 5c once and one code each of the 2- and 4-families.
constexpr std::array<int, 4> shared_codes = {1, 2, 4, 5};
constexpr int letter_bits = 3 * star_size;
constexpr std::uint32_t key_count = 1u << (letter_bits + 4);

/// Feasible local assignments of one Y-star, bucketed by the letters already
/// used at its five X-neighbours (15 bits) and by which shared codes still
/// have room (4 bits). An option in a bucket never overdraws a shared code.
struct Star
{
  int first_edge = 0;
  std::array<int, star_size> x{};
  std::vector<StarOption> options;
  std::vector<std::uint32_t> offset;
  std::vector<std::uint16_t> index;
  /// Options by letter word (base 3, position 0 lowest), canonical order.
  std::vector<std::uint32_t> word_offset;
  std::vector<std::uint16_t> by_word;

  /// The letter word when every position has exactly one unused letter.
  std::optional<std::uint32_t> forced_word(std::uint64_t used) const
  {
    std::uint32_t word = 0;
    for (int p = star_size - 1; p >= 0; --p) {
      auto free = ~(used >> (3 * x[p])) & 7u;
      if (free != 1 && free != 2 && free != 4)
        return std::nullopt;
      word = word * 3 + static_cast<std::uint32_t>(std::countr_zero(free));
    }
    return word;
  }

  std::uint32_t key(std::uint64_t used, std::uint64_t load) const
  {
    std::uint32_t k = 0;
    for (int p = 0; p < star_size; ++p)
      k |= std::uint32_t((used >> (3 * x[p])) & 7u) << (3 * p);
    for (int b = 0; b < 4; ++b)
      if (((load >> (8 * shared_codes[b])) & 0xffu) > 0x80u)
        k |= 1u << (letter_bits + b);
    return k;
  }
};

struct PairHash
{
  std::size_t operator()(std::pair<std::uint64_t, std::uint64_t> const &p) const
  {
    return splitmix64(p.first ^ splitmix64(p.second));
  }
};

/// Completions of the last two stars, per worker, keyed by the letters at
/// their X-neighbours and the remaining load.
struct SuffixCache
{
  static constexpr std::size_t max_entries = std::size_t(1) << 22;

  struct Entry
  {
    std::uint16_t head = 0;
    std::uint16_t tail = 0;
    std::uint64_t zob = 0;
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::uint32_t, std::uint32_t>, PairHash>
    spans;
  std::vector<Entry> pool;
};

struct Sink
{
  std::uint64_t count = 0;
  std::uint64_t fingerprint = 0;
  std::vector<std::uint8_t> flat;
};

/// Counts and digests solutions without looking at their codes.
struct DigestLeaf
{
  static constexpr bool digest_only = true;
  Sink &sink;

  bool operator()(std::uint64_t zob, std::uint8_t const *)
  {
    ++sink.count;
    sink.fingerprint += splitmix64(zob);
    return true;
  }
};

/// Wraps a callable that needs the full code vector.
template <typename F>
struct CodesLeaf
{
  static constexpr bool digest_only = false;
  F f;

  bool operator()(std::uint64_t zob, std::uint8_t const *codes) { return f(zob, codes); }
};

template <typename F>
CodesLeaf<F> codes_leaf(F f)
{
  return {std::move(f)};
}

class Engine
{
public:
  Engine(NamedBigraph const &gp, EnumerateOptions const &opts) : opts_(opts)
  {
    auto const &g = gp.graph;
    auto shape = validate_biregular(g);
    if (g.lambda != star_size || g.mu != 3 || !shape.ok())
      throw std::invalid_argument("enumeration needs a (5,3)-biregular graph");
    if (g.x_count > max_x)
      throw std::invalid_argument("enumeration supports at most 21 X-vertices");
    n_ = static_cast<int>(g.edges.size());
    for (auto const &e : g.edges)
      levels_.push_back(tag_to_level(e.tag));

    std::vector<bool> seen(g.y_count, false);
    for (int i = 0; i < n_; i += star_size) {
      int y = g.edges[i].y;
      if (seen[y])
        throw std::invalid_argument("Y-stars must be contiguous in the edge list");
      seen[y] = true;
      Star s;
      s.first_edge = i;
      for (int p = 0; p < star_size; ++p) {
        if (g.edges[i + p].y != y)
          throw std::invalid_argument("Y-stars must be contiguous in the edge list");
        s.x[p] = g.edges[i + p].x;
      }
      build_options(s, g);
      stars_.push_back(std::move(s));
    }
    for (std::size_t k = stars_.size() >= 2 ? stars_.size() - 2 : 0; k < stars_.size(); ++k)
      for (int x : stars_[k].x)
        suffix_letters_ |= std::uint64_t(7) << (3 * x);
  }

  int edge_count() const { return n_; }
  std::size_t star_count() const { return stars_.size(); }
  Star const &star(std::size_t k) const { return stars_[k]; }

  /// Full visit below star k. `leaf` gets (zobrist, codes) and returns false
  /// to stop the search.
  template <typename Leaf>
  bool visit(std::size_t k, std::uint64_t used, std::uint64_t load, std::uint64_t zob, std::uint8_t *codes,
             Leaf &leaf, SuffixCache &cache) const
  {
    if (k == stars_.size())
      return load != load_bias || leaf(zob, codes);
    if (k + 2 == stars_.size()) {
      auto const &head = stars_[k];
      auto const &tail = stars_[k + 1];
      for (auto const &e : suffix(used, load, cache)) {
        if constexpr (!Leaf::digest_only) {
          std::memcpy(codes + head.first_edge, head.options[e.head].codes.data(), star_size);
          std::memcpy(codes + tail.first_edge, tail.options[e.tail].codes.data(), star_size);
        }
        if (!leaf(zob ^ e.zob, codes))
          return false;
      }
      return true;
    }
    auto const &s = stars_[k];
    auto key = s.key(used, load);
    for (auto j = s.offset[key]; j < s.offset[key + 1]; ++j) {
      auto const &o = s.options[s.index[j]];
      auto next = load - o.load;
      if ((next & load_bias) != load_bias)
        continue;
      std::memcpy(codes + s.first_edge, o.codes.data(), star_size);
      if (!visit(k + 1, used | o.letters, next, zob ^ o.zob, codes, leaf, cache))
        return false;
    }
    return true;
  }

  /// Completions of the last two stars (or of the last star alone when
  /// there is only one), in canonical order.
  std::span<SuffixCache::Entry const> suffix(std::uint64_t used, std::uint64_t load, SuffixCache &cache) const
  {
    auto const memo_key = std::pair{used & suffix_letters_, load};
    if (auto it = cache.spans.find(memo_key); it != cache.spans.end())
      return {cache.pool.data() + it->second.first, it->second.second};
    if (cache.pool.size() > SuffixCache::max_entries) {
      cache.pool.clear();
      cache.spans.clear();
    }
    auto const begin = cache.pool.size();
    auto const &head = stars_[stars_.size() - 2];
    auto const &tail = stars_.back();
    auto key = head.key(used, load);
    for (auto j = head.offset[key]; j < head.offset[key + 1]; ++j) {
      auto const &o = head.options[head.index[j]];
      auto next = load - o.load;
      if ((next & load_bias) != load_bias)
        continue;
      for_each_closing(tail, used | o.letters, next, [&](std::uint16_t t) {
        cache.pool.push_back({head.index[j], t, o.zob ^ tail.options[t].zob});
      });
    }
    auto const length = cache.pool.size() - begin;
    cache.spans.emplace(memo_key, std::pair{static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(length)});
    return {cache.pool.data() + begin, length};
  }

  /// Options of `s` that use up the remaining load exactly.
  template <typename F>
  static void for_each_closing(Star const &s, std::uint64_t used, std::uint64_t load, F &&f)
  {
    auto const need = load - load_bias;
    if (auto word = s.forced_word(used)) {
      for (auto i = s.word_offset[*word]; i < s.word_offset[*word + 1]; ++i)
        if (s.options[s.by_word[i]].load == need)
          f(s.by_word[i]);
      return;
    }
    auto key = s.key(used, load);
    for (auto i = s.offset[key]; i < s.offset[key + 1]; ++i)
      if (s.options[s.index[i]].load == need)
        f(s.index[i]);
  }

  /// Number of completions below star k, memoized on (k, letters, load).
  std::uint64_t count(std::size_t k, std::uint64_t used, std::uint64_t load)
  {
    if (k == stars_.size())
      return load == load_bias ? 1 : 0;
    if (memo_.size() < stars_.size())
      memo_.resize(stars_.size());
    auto &memo = memo_[k];
    auto memo_key = std::pair{used, load};
    if (auto it = memo.find(memo_key); it != memo.end())
      return it->second;
    auto const &s = stars_[k];
    auto key = s.key(used, load);
    std::uint64_t total = 0;
    for (auto j = s.offset[key]; j < s.offset[key + 1]; ++j) {
      auto const &o = s.options[s.index[j]];
      auto next = load - o.load;
      if ((next & load_bias) == load_bias)
        total += count(k + 1, used | o.letters, next);
    }
    memo.emplace(memo_key, total);
    return total;
  }

  bool mirror_ok(std::uint8_t const *codes) const
  {
    LevelTable t;
    for (int i = 0; i < n_; ++i)
      t.counts[codes[i]][levels_[i]] += 2;
    return is_mirror_symmetric(t);
  }

private:
  void build_options(Star &s, BiregularGraph const &g)
  {
    std::array<int, star_size> pick{};
    auto rec = [&](auto &&self, int p, unsigned alphas_used) -> void {
      if (p == star_size) {
        StarOption o;
        for (int q = 0; q < star_size; ++q) {
          auto bit = std::uint64_t(1) << (3 * s.x[q] + betas[pick[q]]);
          if (o.letters & bit)
            return;
          o.letters |= bit;
          o.codes[q] = static_cast<std::uint8_t>(pick[q]);
          o.load += std::uint64_t(1) << (8 * pick[q]);
          o.zob ^= zobrist(static_cast<std::size_t>(s.first_edge + q), pick[q]);
        }
        s.options.push_back(o);
        return;
      }
      int tag = g.edges[s.first_edge + p].tag;
      for (int c = 0; c < pair_count; ++c) {
        if (alphas_used & (1u << alphas[c]))
          continue;
        if (opts_.fix_135) {
          auto forced = ansatz_code(tag);
          if (forced ? c != *forced : is_ansatz_code(c))
            continue;
        }
        pick[p] = c;
        self(self, p + 1, alphas_used | (1u << alphas[c]));
      }
    };
    rec(rec, 0, 0);
    if (s.options.size() > 0xffff)
      throw std::logic_error("star option table overflow");

    // Each option fits every key whose field p avoids the option's letter at
    // position p (four values per field) and whose room bits include the
    // shared codes it uses.
    std::vector<std::vector<std::uint16_t>> bucket(key_count);
    for (std::size_t oi = 0; oi < s.options.size(); ++oi) {
      auto const &o = s.options[oi];
      std::array<std::array<std::uint32_t, 4>, star_size> fields{};
      std::uint32_t needs = 0;
      for (int p = 0; p < star_size; ++p) {
        int b = betas[o.codes[p]];
        int n = 0;
        for (std::uint32_t m = 0; m < 8; ++m)
          if (!(m & (1u << b)))
            fields[p][n++] = m << (3 * p);
        for (int r = 0; r < 4; ++r)
          if (o.codes[p] == shared_codes[r])
            needs |= 1u << r;
      }
      for (std::uint32_t room = 0; room < 16; ++room) {
        if ((room & needs) != needs)
          continue;
        for (std::uint32_t t = 0; t < (1u << (2 * star_size)); ++t) {
          std::uint32_t key = room << letter_bits;
          for (int p = 0; p < star_size; ++p)
            key |= fields[p][(t >> (2 * p)) & 3u];
          bucket[key].push_back(static_cast<std::uint16_t>(oi));
        }
      }
    }
    std::vector<std::vector<std::uint16_t>> words(243);
    for (std::size_t oi = 0; oi < s.options.size(); ++oi) {
      std::uint32_t word = 0;
      for (int p = star_size - 1; p >= 0; --p)
        word = word * 3 + static_cast<std::uint32_t>(betas[s.options[oi].codes[p]]);
      words[word].push_back(static_cast<std::uint16_t>(oi));
    }
    s.word_offset.assign(words.size() + 1, 0);
    for (std::size_t w = 0; w < words.size(); ++w) {
      s.word_offset[w + 1] = s.word_offset[w] + static_cast<std::uint32_t>(words[w].size());
      s.by_word.insert(s.by_word.end(), words[w].begin(), words[w].end());
    }

    s.offset.assign(key_count + 1, 0);
    for (std::uint32_t k = 0; k < key_count; ++k)
      s.offset[k + 1] = s.offset[k] + static_cast<std::uint32_t>(bucket[k].size());
    s.index.reserve(s.offset.back());
    for (auto const &b : bucket)
      s.index.insert(s.index.end(), b.begin(), b.end());
  }

  EnumerateOptions opts_;
  int n_ = 0;
  std::uint64_t suffix_letters_ = 0;
  std::vector<int> levels_;
  std::vector<Star> stars_;
  std::vector<std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t, PairHash>> memo_;
};

} // namespace

std::string_view pair_name(int code)
{
  return names.at(static_cast<std::size_t>(code));
}

std::optional<int> parse_pair(std::string_view text)
{
  for (int c = 0; c < pair_count; ++c)
    if (names[c] == text)
      return c;
  return std::nullopt;
}

int pair_alpha(int code)
{
  return alphas.at(static_cast<std::size_t>(code));
}

int pair_beta(int code)
{
  return betas.at(static_cast<std::size_t>(code));
}

int pair_weight(int code)
{
  return weights.at(static_cast<std::size_t>(code));
}

ColorPairSystem gcc_system(int scale)
{
  ColorPairSystem sys;
  sys.lambda = 5;
  sys.mu = 3;
  for (int c = 0; c < pair_count; ++c) {
    sys.theta.push_back({alphas[c] - 1, betas[c]});
    sys.omega.push_back(weights[c] * scale);
  }
  return sys;
}

EdgeBicoloring to_bicoloring(GccSolution const &sol)
{
  EdgeBicoloring out;
  for (int c : sol.pairs)
    out.pairs.push_back({pair_alpha(c) - 1, pair_beta(c)});
  return out;
}

ValidationReport verify_gcc_solution(NamedBigraph const &gprime, GccSolution const &sol)
{
  ValidationReport report;
  if (sol.pairs.size() != gprime.graph.edges.size()) {
    report.add("range", "solution",
               std::to_string(sol.pairs.size()) + " pairs for " + std::to_string(gprime.graph.edges.size()) +
                 " edges");
    return report;
  }
  for (std::size_t i = 0; i < sol.pairs.size(); ++i)
    if (sol.pairs[i] < 0 || sol.pairs[i] >= pair_count)
      report.add("range", "e" + std::to_string(i), "pair code " + std::to_string(sol.pairs[i]));
  if (!report.ok())
    return report;
  auto coloring = to_bicoloring(sol);
  auto sys = gcc_system();
  report.merge(check_faithful(gprime.graph, coloring, sys));
  report.merge(check_weight_compatible(coloring, sys));
  return report;
}

std::uint64_t solution_hash(std::span<int const> codes)
{
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < codes.size(); ++i)
    z ^= zobrist(i, codes[i]);
  return splitmix64(z);
}

EnumerationResult enumerate_gcc_solutions(NamedBigraph const &gprime, EnumerateOptions const &opts)
{
  Engine engine(gprime, opts);
  EnumerationResult result;
  if (engine.star_count() == 0)
    return result;
  if (opts.count_only && !opts.fingerprint && !opts.reversible_only) {
    result.count = engine.count(0, 0, initial_load());
    return result;
  }

  int const n = engine.edge_count();
  bool const collect = !opts.count_only;

  // One task per admissible option of the first star. Tasks are prefixes in
  // canonical order, so concatenating their results keeps that order.
  auto const &first = engine.star(0);
  std::vector<std::uint16_t> tasks;
  auto const root_key = first.key(0, initial_load());
  for (auto j = first.offset[root_key]; j < first.offset[root_key + 1]; ++j) {
    auto const &o = first.options[first.index[j]];
    auto next = initial_load() - o.load;
    if ((next & load_bias) == load_bias)
      tasks.push_back(first.index[j]);
  }

  std::vector<Sink> sinks(tasks.size());
  std::atomic<std::size_t> next_task{0};
  auto work = [&] {
    std::vector<std::uint8_t> codes(n);
    SuffixCache cache;
    for (std::size_t t; (t = next_task.fetch_add(1)) < tasks.size();) {
      auto &sink = sinks[t];
      auto const &o = first.options[tasks[t]];
      std::memcpy(codes.data() + first.first_edge, o.codes.data(), star_size);
      if (!collect && !opts.reversible_only) {
        DigestLeaf leaf{sink};
        engine.visit(1, o.letters, initial_load() - o.load, o.zob, codes.data(), leaf, cache);
        continue;
      }
      auto leaf = codes_leaf([&](std::uint64_t zob, std::uint8_t const *c) {
        if (opts.reversible_only && !engine.mirror_ok(c))
          return true;
        ++sink.count;
        sink.fingerprint += splitmix64(zob);
        if (collect && (!opts.limit || sink.flat.size() < opts.limit * n))
          sink.flat.insert(sink.flat.end(), c, c + n);
        return true;
      });
      engine.visit(1, o.letters, initial_load() - o.load, o.zob, codes.data(), leaf, cache);
    }
  };
  unsigned const workers = std::max(1u, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }

  result.fingerprint = 0;
  for (auto const &sink : sinks) {
    result.count += sink.count;
    *result.fingerprint += sink.fingerprint;
    for (std::size_t off = 0; off < sink.flat.size(); off += n) {
      if (opts.limit && result.solutions.size() >= opts.limit)
        break;
      result.solutions.push_back({std::vector<int>(sink.flat.begin() + off, sink.flat.begin() + off + n)});
    }
  }
  return result;
}

std::uint64_t for_each_gcc_solution(NamedBigraph const &gprime, EnumerateOptions const &opts,
                                    std::function<bool(std::span<int const>)> const &visit)
{
  Engine engine(gprime, opts);
  if (engine.star_count() == 0)
    return 0;
  int const n = engine.edge_count();
  std::vector<std::uint8_t> codes(n);
  std::vector<int> wide(n);
  std::uint64_t visited = 0;
  auto leaf = codes_leaf([&](std::uint64_t, std::uint8_t const *c) {
    if (opts.reversible_only && !engine.mirror_ok(c))
      return true;
    ++visited;
    std::copy(c, c + n, wide.begin());
    return visit(wide);
  });
  SuffixCache cache;
  engine.visit(0, 0, initial_load(), 0, codes.data(), leaf, cache);
  return visited;
}

GccSolution apply_reversal(GccSolution const &sol)
{
  GccSolution out = sol;
  for (int &c : out.pairs)
    c = reverse_pair(c);
  return out;
}

std::array<int, 5> LevelTable::column_sums() const
{
  std::array<int, 5> sums{};
  for (auto const &row : counts)
    for (int l = 0; l < 5; ++l)
      sums[l] += row[l];
  return sums;
}

int LevelTable::row_sum(int code) const
{
  int s = 0;
  for (int v : counts.at(static_cast<std::size_t>(code)))
    s += v;
  return s;
}

LevelTable level_distribution(NamedBigraph const &gprime, std::span<int const> codes)
{
  if (codes.size() != gprime.graph.edges.size())
    throw std::invalid_argument("assignment length does not match the graph");
  LevelTable t;
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (codes[i] >= 0)
      t.counts.at(static_cast<std::size_t>(codes[i]))[tag_to_level(gprime.graph.edges[i].tag)] += 2;
  return t;
}

LevelTable level_distribution(NamedBigraph const &gprime, GccSolution const &sol)
{
  return level_distribution(gprime, std::span<int const>(sol.pairs));
}

bool is_mirror_symmetric(LevelTable const &t)
{
  for (int p = 0; p < pair_count; ++p)
    for (int l = 0; l < 5; ++l)
      if (t.counts[p][l] != t.counts[reverse_pair(p)][4 - l])
        return false;
  return true;
}

bool is_distribution_reversible(NamedBigraph const &gprime, GccSolution const &sol)
{
  auto report = verify_gcc_solution(gprime, sol);
  if (!report.ok())
    throw std::invalid_argument("not a valid GCC solution: " + report.violations.front().message);
  return is_mirror_symmetric(level_distribution(gprime, sol));
}

std::vector<int> lift_solution(FoldedGraph const &folded, GccSolution const &sol)
{
  std::vector<int> lifted;
  for (int img : folded.edge_image)
    lifted.push_back(sol.pairs.at(static_cast<std::size_t>(img)));
  return lifted;
}

ValidationReport verify_lifted(NamedBigraph const &g, std::span<int const> lifted)
{
  ValidationReport report;
  if (lifted.size() != g.graph.edges.size()) {
    report.add("range", "lifted", "assignment length does not match G");
    return report;
  }
  EdgeBicoloring coloring;
  for (int c : lifted) {
    if (c < 0 || c >= pair_count) {
      report.add("range", "lifted", "pair code " + std::to_string(c));
      return report;
    }
    coloring.pairs.push_back({pair_alpha(c) - 1, pair_beta(c)});
  }
  auto sys = gcc_system(2);
  report.merge(check_faithful(g.graph, coloring, sys));
  report.merge(check_weight_compatible(coloring, sys));
  return report;
}

std::vector<CircleEntry> circle_distribution(std::span<int const> lifted, std::vector<GreatCircle> const &circles,
                                             std::vector<int> const &edge_image)
{
  std::vector<CircleEntry> out;
  for (auto const &circle : circles) {
    std::map<int, std::vector<int>> by_image;
    for (int row : circle.rows)
      by_image[edge_image.at(static_cast<std::size_t>(row))].push_back(lifted[row]);
    if (by_image.size() != 2)
      throw std::logic_error("great circle does not span two G' edges");
    CircleEntry e{circle.symbol, circle.pattern, {}};
    int k = 0;
    for (auto const &[img, codes] : by_image) {
      if (codes.size() != 2 || codes[0] != codes[1])
        throw std::logic_error("preimages of one G' edge carry different pairs");
      e.pairs[k++] = codes[0];
    }
    std::sort(e.pairs.begin(), e.pairs.end());
    out.push_back(e);
  }
  return out;
}

std::vector<std::string> paper_solution_names()
{
  return {"ss4", "ss5a", "ss5b"};
}

PaperSolutionDoc parse_paper_solution(std::string_view name, std::string_view json_text)
{
  try {
    auto doc = nlohmann::json::parse(json_text);
    PaperSolutionDoc out;
    out.name = std::string(name);
    out.description = doc.value("description", "");
    for (auto const &[w, pair] : doc.at("ansatz").items()) {
      auto code = parse_pair(pair.get<std::string>());
      int tag = std::stoi(w);
      if (!code || tag < 1 || tag > 5)
        throw DataError("bad ansatz entry " + w);
      out.ansatz[tag] = *code;
    }
    for (auto const &e : doc.at("entries")) {
      auto code = parse_pair(e.at(3).get<std::string>());
      if (!code)
        throw DataError("unknown pair '" + e.at(3).get<std::string>() + "'");
      out.entries.push_back({e.at(0).get<std::string>(), e.at(1).get<int>(), e.at(2).get<std::string>(), *code});
    }
    return out;
  } catch (nlohmann::json::exception const &e) {
    throw DataError(std::string("solution JSON: ") + e.what());
  } catch (std::logic_error const &e) {
    throw DataError(std::string("solution JSON: ") + e.what());
  }
}

PaperSolutionDoc builtin_paper_solution(std::string_view name)
{
  auto all = nlohmann::json::parse(embedded::paper_solutions_json);
  if (!all.contains(name))
    throw DataError("no built-in paper solution '" + std::string(name) + "'");
  return parse_paper_solution(name, all.at(std::string(name)).dump());
}

std::size_t ImportResult::assigned() const
{
  return static_cast<std::size_t>(std::count_if(partial.begin(), partial.end(), [](int c) { return c >= 0; }));
}

ImportResult import_paper_solution(NamedBigraph const &gprime, PaperSolutionDoc const &doc)
{
  auto const &edges = gprime.graph.edges;
  ImportResult r;
  r.partial.assign(edges.size(), -1);

  for (auto const &[tag, code] : doc.ansatz) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].tag == tag)
        r.partial[i] = code;
    r.declared.counts[code][tag_to_level(tag)] += 2 * static_cast<int>(std::count_if(
      edges.begin(), edges.end(), [tag](Edge const &e) { return e.tag == tag; }));
  }

  for (auto const &e : doc.entries) {
    auto where = e.x + " " + std::to_string(e.w) + " " + e.y;
    if (e.w >= 1 && e.w <= 5)
      r.declared.counts[e.pair][e.w - 1] += 2;
    auto y = gprime.y_index(e.y);
    auto x = gprime.x_index(e.x);
    if (!y || !x) {
      r.report.add("unknown-vertex", where, "no G' vertex named " + (!y ? e.y : e.x));
      continue;
    }
    auto edge = gprime.find_edge(*y, *x);
    if (!edge) {
      r.report.add("non-edge", where, e.y + " and " + e.x + " are not adjacent in G'");
      continue;
    }
    int derived = edges[*edge].tag;
    if (derived != e.w) {
      r.report.add("wrong-color", where,
                   "edge (" + e.y + "," + e.x + ") has w-color " + std::to_string(derived) + ", printed " +
                     std::to_string(e.w));
      continue;
    }
    int &slot = r.partial[*edge];
    if (slot >= 0 && slot != e.pair) {
      r.report.add("conflict", where,
                   "edge already carries " + std::string(pair_name(slot)) + ", printed " +
                     std::string(pair_name(e.pair)));
      continue;
    }
    slot = e.pair;
  }

  // The partial assignment itself: distinct alphas at y, betas at x, weights.
  std::map<std::pair<int, int>, int> alpha_seen, beta_seen;
  std::array<int, pair_count> used{};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int c = r.partial[i];
    if (c < 0)
      continue;
    ++used[c];
    if (++alpha_seen[{edges[i].y, pair_alpha(c)}] == 2)
      r.report.add("partial-proper", gprime.y_names[edges[i].y],
                   "symbol " + std::to_string(pair_alpha(c)) + " assigned twice");
    if (++beta_seen[{edges[i].x, pair_beta(c)}] == 2)
      r.report.add("partial-proper", gprime.x_names[edges[i].x],
                   std::string("letter ") + "abc"[pair_beta(c)] + " assigned twice");
  }
  for (int c = 0; c < pair_count; ++c)
    if (used[c] > weights[c])
      r.report.add("partial-weight", std::string(pair_name(c)),
                   std::to_string(used[c]) + " edges, weight " + std::to_string(weights[c]));

  r.consistent = level_distribution(gprime, r.partial);
  return r;
}

FoldedGraph default_gprime(GccDataset const &ds)
{
  return fold_G(ds, naming_from_displays(ds));
}

} // namespace bicolor::gcc
