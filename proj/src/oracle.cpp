#include "geogrowth/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "geogrowth/errors.hpp"

namespace geogrowth {

namespace {

// Words are byte strings over letter codes 2v (v) and 2v+1 (v^-1).
using Code = std::string;

class Context {
 public:
  Context(const NumberedGraph& g, const OracleLimits& limits) : g_(g), limits_(limits) {
    if (g.size() > 127) throw ResourceError("oracle supports at most 127 vertices");
  }

  Code encode(const Word& w) const {
    if (w.size() > limits_.max_word_length)
      throw ResourceError("word length " + std::to_string(w.size()) + " exceeds oracle limit " +
                          std::to_string(limits_.max_word_length));
    Code c;
    for (const auto& s : w) {
      make_generator(g_, s.vertex, s.sign);
      c.push_back(static_cast<char>(2 * s.vertex + (s.sign < 0 ? 1 : 0)));
    }
    return c;
  }

  Word decode(const Code& c) const {
    Word w;
    for (char ch : c) {
      const auto x = static_cast<unsigned char>(ch);
      w.push_back({static_cast<Vertex>(x / 2), x % 2 ? -1 : 1});
    }
    return w;
  }

  static Vertex vertex(char ch) { return static_cast<unsigned char>(ch) / 2; }
  static bool inverse(char ch) { return static_cast<unsigned char>(ch) % 2; }

  // Some maximal single-vertex run is mixed-sign or longer than floor(N/2).
  bool has_bad_block(const Code& c) const {
    std::size_t i = 0;
    while (i < c.size()) {
      const Vertex v = vertex(c[i]);
      std::size_t j = i;
      bool mixed = false;
      while (j < c.size() && vertex(c[j]) == v) {
        if (inverse(c[j]) != inverse(c[i])) mixed = true;
        ++j;
      }
      if (mixed || static_cast<int>(j - i) > g_.number(v) / 2) return true;
      i = j;
    }
    return false;
  }

  // Breadth-first over swap moves.  With stop_at_bad the search ends as soon
  // as a word with a bad block turns up; the return value says whether one did.
  bool explore(const Code& start, bool stop_at_bad, std::unordered_set<Code>* out) const {
    std::unordered_set<Code> seen{start};
    std::deque<Code> queue{start};
    if (stop_at_bad && has_bad_block(start)) return true;
    while (!queue.empty()) {
      Code w = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Vertex a = vertex(w[i]), b = vertex(w[i + 1]);
        if (a == b || !g_.adjacent(a, b)) continue;
        Code x = w;
        std::swap(x[i], x[i + 1]);
        if (!seen.insert(x).second) continue;
        if (seen.size() > limits_.closure_cap)
          throw ResourceError("shuffle closure exceeds cap of " + std::to_string(limits_.closure_cap) + " words");
        if (stop_at_bad && has_bad_block(x)) return true;
        queue.push_back(std::move(x));
      }
    }
    if (out) *out = std::move(seen);
    return false;
  }

  bool geodesic(const Code& c) const { return !explore(c, true, nullptr); }

  std::vector<char> letters() const {
    std::vector<char> out;
    for (Vertex v = 0; v < g_.size(); ++v) {
      out.push_back(static_cast<char>(2 * v));
      if (g_.number(v) != 2) out.push_back(static_cast<char>(2 * v + 1));
    }
    return out;
  }

 private:
  const NumberedGraph& g_;
  const OracleLimits& limits_;
};

}  // namespace

std::set<Word> shuffle_closure(const NumberedGraph& g, const Word& w, const OracleLimits& limits) {
  Context ctx(g, limits);
  std::unordered_set<Code> all;
  ctx.explore(ctx.encode(w), false, &all);
  std::set<Word> out;
  for (const auto& c : all) out.insert(ctx.decode(c));
  return out;
}

bool is_geodesic(const NumberedGraph& g, const Word& w, const OracleLimits& limits) {
  Context ctx(g, limits);
  return ctx.geodesic(ctx.encode(w));
}

CountTable oracle_counts(const NumberedGraph& g, std::size_t n_max, const OracleLimits& limits) {
  Context ctx(g, limits);
  if (n_max > limits.max_n)
    throw ResourceError("n_max " + std::to_string(n_max) + " exceeds oracle limit " + std::to_string(limits.max_n));
  if (n_max > limits.max_word_length)
    throw ResourceError("n_max " + std::to_string(n_max) + " exceeds oracle word length limit " +
                        std::to_string(limits.max_word_length));
  const auto letters = ctx.letters();
  const double words = std::pow(static_cast<double>(letters.size()), static_cast<double>(n_max));
  if (words > static_cast<double>(limits.word_budget))
    throw ResourceError("oracle enumeration of " + std::to_string(letters.size()) + "^" + std::to_string(n_max) +
                        " words exceeds budget of " + std::to_string(limits.word_budget));

  CountTable counts(n_max + 1);
  counts[0] = 1;
  if (n_max == 0 || letters.empty()) return counts;

  // One task per first letter; each task owns its own table.
  std::vector<std::vector<unsigned long long>> partial(letters.size(),
                                                       std::vector<unsigned long long>(n_max + 1, 0));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= letters.size()) return;
      try {
        auto& table = partial[task];
        Code w(1, letters[task]);
        if (!ctx.geodesic(w)) continue;
        // Depth-first over geodesic words; every prefix of a geodesic is one.
        auto dfs = [&](auto&& self, Code& cur) -> void {
          ++table[cur.size()];
          if (cur.size() == n_max) return;
          for (char a : letters) {
            cur.push_back(a);
            if (ctx.geodesic(cur)) self(self, cur);
            cur.pop_back();
          }
        };
        dfs(dfs, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, letters.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& table : partial)
    for (std::size_t n = 0; n <= n_max; ++n) counts[n] += static_cast<unsigned long>(table[n]);
  return counts;
}

}  // namespace geogrowth
