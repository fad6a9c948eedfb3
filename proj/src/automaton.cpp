#include "geogrowth/automaton.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "geogrowth/errors.hpp"

namespace geogrowth {

int max_power(int number) { return number / 2; }

namespace {

bool power_in_bounds(int number, int p) {
  if (number == 2) return p == 0 || p == 1;
  return -max_power(number) <= p && p <= max_power(number);
}

}  // namespace

PoweredClique::PoweredClique(const NumberedGraph& g, std::vector<std::pair<Vertex, int>> powers)
    : powers_(std::move(powers)) {
  std::sort(powers_.begin(), powers_.end());
  std::vector<Vertex> support;
  for (const auto& [v, p] : powers_) {
    if (v >= g.size()) throw PreconditionError("powered clique vertex out of range");
    if (p == 0) throw PreconditionError("powered clique stores a zero power at '" + g.name(v) + "'");
    if (!power_in_bounds(g.number(v), p))
      throw PreconditionError("power " + std::to_string(p) + " at '" + g.name(v) + "' is out of bounds");
    support.push_back(v);
  }
  Clique check(g, support);  // throws unless the support is a clique
}

int PoweredClique::power(Vertex v) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), std::make_pair(v, std::numeric_limits<int>::min()));
  return it != powers_.end() && it->first == v ? it->second : 0;
}

std::vector<Vertex> PoweredClique::support() const {
  std::vector<Vertex> out;
  out.reserve(powers_.size());
  for (const auto& [v, _] : powers_) out.push_back(v);
  return out;
}

std::string notation(const NumberedGraph& g, const PoweredClique& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, p] : s.powers()) {
    if (!first) out += ", ";
    first = false;
    out += g.name(v) + "^" + std::to_string(p);
  }
  return out + "}";
}

PowerProfile power_profile(const PoweredClique& s, const NumberedGraph& g) {
  PowerProfile p;
  for (const auto& [v, pw] : s.powers()) p.add({pw, g.number(v)});
  return p;
}

std::string to_string(const PowerProfile& p) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [pair, mult] : p.entries()) {
    for (std::size_t i = 0; i < mult; ++i) {
      if (!first) os << ", ";
      first = false;
      os << '(' << pair.first << ", " << pair.second << ')';
    }
  }
  os << '}';
  return os.str();
}

GeodesicFSA::State GeodesicFSA::step(State s, const Generator& g) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), g);
  if (it == alphabet_.end()) throw PreconditionError("generator is not a letter of this automaton");
  return step(s, static_cast<std::size_t>(it - alphabet_.begin()));
}

std::optional<GeodesicFSA::State> GeodesicFSA::find(const PoweredClique& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

class FsaBuilder {
 public:
  explicit FsaBuilder(const NumberedGraph& g) : g_(g) {}

  GeodesicFSA build() {
    GeodesicFSA fsa;
    fsa.alphabet_ = generators(g_);
    for (const auto& group : cliques(g_))
      for (const auto& c : group) enumerate_powers(fsa, c.members(), 0, {});
    for (std::size_t i = 0; i < fsa.states_.size(); ++i) fsa.index_.emplace(fsa.states_[i], i);

    const std::size_t letters = fsa.alphabet_.size();
    fsa.delta_.assign((fsa.states_.size() + 1) * letters, fsa.reject());
    for (std::size_t s = 0; s < fsa.states_.size(); ++s)
      for (std::size_t a = 0; a < letters; ++a) fsa.delta_[s * letters + a] = transition(fsa, s, fsa.alphabet_[a]);
    return fsa;
  }

 private:
  void enumerate_powers(GeodesicFSA& fsa, const std::vector<Vertex>& members, std::size_t i,
                        std::vector<std::pair<Vertex, int>> acc) {
    if (i == members.size()) {
      PoweredClique pc;
      pc.powers_ = std::move(acc);
      fsa.states_.push_back(std::move(pc));
      return;
    }
    const Vertex v = members[i];
    const int n = g_.number(v);
    const int k = max_power(n);
    for (int p = (n == 2 ? 1 : -k); p <= k; ++p) {
      if (p == 0) continue;
      auto next = acc;
      next.emplace_back(v, p);
      enumerate_powers(fsa, members, i + 1, std::move(next));
    }
  }

  GeodesicFSA::State transition(const GeodesicFSA& fsa, std::size_t s, const Generator& a) const {
    const PoweredClique& from = fsa.states_[s];
    const int n = g_.number(a.vertex);
    const int cur = from.power(a.vertex);
    const int k = max_power(n);
    if (a.sign > 0) {
      if (!(0 <= cur && cur < k)) return fsa.reject();
    } else {
      if (n == 2 || !(-k < cur && cur <= 0)) return fsa.reject();
    }
    PoweredClique to;
    for (const auto& [u, p] : from.powers())
      if (g_.adjacent(u, a.vertex)) to.powers_.emplace_back(u, p);
    to.powers_.emplace_back(a.vertex, cur + a.sign);
    std::sort(to.powers_.begin(), to.powers_.end());
    auto it = fsa.index_.find(to);
    if (it == fsa.index_.end()) throw InternalError("transition target is not a powered clique");
    return it->second;
  }

  const NumberedGraph& g_;
};

GeodesicFSA build_fsa(const NumberedGraph& g) { return FsaBuilder(g).build(); }

RunResult run(const GeodesicFSA& fsa, std::span<const Generator> word) {
  GeodesicFSA::State s = fsa.start();
  for (const auto& letter : word) {
    s = fsa.step(s, letter);
    if (s == fsa.reject()) return {false, s};
  }
  return {true, s};
}

CountTable count_geodesics(const GeodesicFSA& fsa, std::size_t n_max) {
  const std::size_t states = fsa.num_accept();
  const std::size_t letters = fsa.alphabet().size();
  CountTable out(n_max + 1);
  std::vector<BigInt> cur(states), next(states);
  cur[fsa.start()] = 1;
  for (std::size_t n = 0;; ++n) {
    for (const auto& c : cur) out[n] += c;
    if (n == n_max) break;
    std::fill(next.begin(), next.end(), BigInt(0));
    for (std::size_t s = 0; s < states; ++s) {
      if (cur[s] == 0) continue;
      for (std::size_t a = 0; a < letters; ++a) {
        auto t = fsa.step(s, a);
        if (t != fsa.reject()) next[t] += cur[s];
      }
    }
    std::swap(cur, next);
  }
  return out;
}

std::vector<CountTable> state_language_counts(const GeodesicFSA& fsa, std::size_t n_max) {
  const std::size_t states = fsa.num_accept();
  const std::size_t letters = fsa.alphabet().size();
  std::vector<CountTable> out(states, CountTable(n_max + 1));
  for (auto& c : out) c[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t s = 0; s < states; ++s)
      for (std::size_t a = 0; a < letters; ++a) {
        auto t = fsa.step(s, a);
        if (t != fsa.reject()) out[s][n] += out[t][n - 1];
      }
  return out;
}

std::size_t BetaReport::at(const PowerProfile& p, const PowerProfile& q) const {
  auto it = beta.find({p, q});
  return it == beta.end() ? 0 : it->second;
}

BetaReport beta_table(const GeodesicFSA& fsa, const NumberedGraph& g) {
  using Row = std::map<PowerProfile, std::size_t>;
  std::vector<PowerProfile> profile(fsa.num_accept());
  for (std::size_t s = 0; s < fsa.num_accept(); ++s) profile[s] = power_profile(fsa.state(s), g);

  std::map<PowerProfile, Row> first_row;
  std::set<std::pair<PowerProfile, PowerProfile>> bad;
  for (std::size_t s = 0; s < fsa.num_accept(); ++s) {
    Row row;
    for (std::size_t a = 0; a < fsa.alphabet().size(); ++a) {
      auto t = fsa.step(s, a);
      if (t != fsa.reject()) ++row[profile[t]];
    }
    auto [it, inserted] = first_row.try_emplace(profile[s], row);
    if (inserted) continue;
    const Row& ref = it->second;
    for (const auto& [q, c] : row)
      if (auto r = ref.find(q); r == ref.end() || r->second != c) bad.insert({profile[s], q});
    for (const auto& [q, c] : ref)
      if (!row.contains(q)) bad.insert({profile[s], q});
  }

  BetaReport report;
  for (const auto& [p, row] : first_row)
    for (const auto& [q, c] : row) report.beta[{p, q}] = c;
  report.violations.assign(bad.begin(), bad.end());
  return report;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const GeodesicFSA& fsa, const NumberedGraph& g, bool include_reject) {
  std::ostringstream os;
  os << "digraph geodesic_fsa {\n  rankdir=LR;\n  node [shape=doublecircle];\n";
  os << "  start [shape=point];\n  start -> s0;\n";
  for (std::size_t s = 0; s < fsa.num_accept(); ++s)
    os << "  s" << s << " [label=\"" << dot_escape(notation(g, fsa.state(s))) << "\"];\n";
  if (include_reject) os << "  reject [shape=box, label=\"reject\"];\n";
  for (std::size_t s = 0; s < fsa.num_accept(); ++s) {
    for (std::size_t a = 0; a < fsa.alphabet().size(); ++a) {
      auto t = fsa.step(s, a);
      const std::string label = dot_escape(to_string(g, fsa.alphabet()[a]));
      if (t != fsa.reject())
        os << "  s" << s << " -> s" << t << " [label=\"" << label << "\"];\n";
      else if (include_reject)
        os << "  s" << s << " -> reject [label=\"" << label << "\"];\n";
    }
  }
  if (include_reject && !fsa.alphabet().empty()) os << "  reject -> reject [label=\"*\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace geogrowth
