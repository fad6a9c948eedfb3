#include "geogrowth/generators.hpp"

#include <sstream>

#include "geogrowth/errors.hpp"

namespace geogrowth {

Generator make_generator(const NumberedGraph& g, Vertex v, int sign) {
  if (v >= g.size()) throw PreconditionError("generator vertex out of range");
  if (sign != 1 && sign != -1) throw PreconditionError("generator sign must be +1 or -1");
  if (sign == -1 && g.number(v) == 2)
    throw PreconditionError("'" + g.name(v) + "' has order 2, so it has no separate inverse letter");
  return {v, sign};
}

std::vector<Generator> generators(const NumberedGraph& g) {
  std::vector<Generator> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    out.push_back({v, 1});
    if (g.number(v) != 2) out.push_back({v, -1});
  }
  return out;
}

std::string to_string(const NumberedGraph& g, const Generator& s) {
  return s.sign > 0 ? g.name(s.vertex) : g.name(s.vertex) + "^-1";
}

std::string to_string(const NumberedGraph& g, const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(g, w[i]);
  }
  return out;
}

Word parse_word(const NumberedGraph& g, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string name = tok;
    if (auto pos = tok.rfind('^'); pos != std::string::npos) {
      const std::string exp = tok.substr(pos + 1);
      if (exp == "-1")
        sign = -1;
      else if (exp != "1")
        throw PreconditionError("letter '" + tok + "' must be v, v^1 or v^-1");
      name = tok.substr(0, pos);
    }
    auto v = g.find(name);
    if (!v) throw PreconditionError("unknown vertex '" + name + "' in word");
    w.push_back(make_generator(g, *v, sign));
  }
  return w;
}

}  // namespace geogrowth
