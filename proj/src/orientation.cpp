#include "mckay/orientation.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "mckay/error.hpp"

namespace mckay {

HeightFunction HeightFunction::shifted(long c) const {
  HeightFunction out = *this;
  for (auto& v : out.values) v += c;
  return out;
}

std::string HeightFunction::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += "i" + std::to_string(i) + "=" + std::to_string(values[i]);
  }
  return s;
}

HeightFunction standard_height(const McKayGraph& graph) {
  HeightFunction h;
  for (int p : graph.parities()) h.values.push_back(p);
  return h;
}

void validate_height(const McKayGraph& graph, const HeightFunction& h) {
  if (h.size() != graph.size())
    throw Error(ErrorKind::Constraint, "height function has " + std::to_string(h.size()) + " values for " +
                                           std::to_string(graph.size()) + " vertices");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (((h[i] - graph.parity(i)) % 2 + 2) % 2 != 0)
      throw Error(ErrorKind::Constraint, "h(" + std::to_string(i) + ") has the wrong parity");
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      if (graph.multiplicity(i, j) > 0 && std::labs(h[i] - h[j]) != 1)
        throw Error(ErrorKind::Constraint, "edge " + std::to_string(i) + "-" + std::to_string(j) +
                                               " has |h(i) - h(j)| != 1");
}

namespace {

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad integer '" + s + "'");
  }
  if (pos != s.size()) throw Error(ErrorKind::Parse, "bad integer '" + s + "'");
  return v;
}

}  // namespace

HeightFunction parse_height(const McKayGraph& graph, const std::string& text) {
  if (text == "std") return standard_height(graph);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  const std::size_t n = graph.size();
  HeightFunction h;
  h.values.assign(n, 0);
  bool named = !parts.empty() && parts[0].find('=') != std::string::npos;
  if (parts.size() != n)
    throw Error(ErrorKind::Parse, "height function needs " + std::to_string(n) + " values");
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!named) {
      h[k] = parse_long(parts[k]);
      continue;
    }
    auto eq = parts[k].find('=');
    if (eq == std::string::npos || parts[k].size() < 2 || parts[k][0] != 'i')
      throw Error(ErrorKind::Parse, "expected iK=V, got '" + parts[k] + "'");
    long v = parse_long(parts[k].substr(1, eq - 1));
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
      throw Error(ErrorKind::Parse, "bad or repeated vertex in '" + parts[k] + "'");
    seen[v] = true;
    h[v] = parse_long(parts[k].substr(eq + 1));
  }
  validate_height(graph, h);
  return h;
}

std::vector<Edge> edges(const McKayGraph& graph) {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < graph.size(); ++u)
    for (std::size_t v = u + 1; v < graph.size(); ++v)
      for (int c = 0; c < graph.multiplicity(u, v); ++c) out.push_back({u, v, c});
  return out;
}

OrientedQuiver::OrientedQuiver(const McKayGraph& graph, HeightFunction h) : h_(std::move(h)) {
  validate_height(graph, h_);
  for (const auto& e : edges(graph)) {
    if (h_[e.v] == h_[e.u] - 1) arrows_.push_back({e.u, e.v});
    else arrows_.push_back({e.v, e.u});
  }
}

std::vector<std::size_t> OrientedQuiver::arrows_into(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].target == i) out.push_back(k);
  return out;
}

std::vector<std::size_t> OrientedQuiver::arrows_out_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].source == i) out.push_back(k);
  return out;
}

bool OrientedQuiver::is_sink(std::size_t i) const { return arrows_out_of(i).empty(); }
bool OrientedQuiver::is_source(std::size_t i) const { return arrows_into(i).empty(); }

bool OrientedQuiver::same_orientation(const OrientedQuiver& other) const {
  if (arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].source != other.arrows_[k].source || arrows_[k].target != other.arrows_[k].target)
      return false;
  return true;
}

OrientedQuiver orient(const McKayGraph& graph, const HeightFunction& h) { return OrientedQuiver(graph, h); }

bool is_sink(const McKayGraph& graph, const HeightFunction& h, std::size_t i) {
  for (std::size_t j = 0; j < graph.size(); ++j)
    if (graph.multiplicity(i, j) > 0 && h[j] < h[i]) return false;
  return true;
}

bool is_source(const McKayGraph& graph, const HeightFunction& h, std::size_t i) {
  for (std::size_t j = 0; j < graph.size(); ++j)
    if (graph.multiplicity(i, j) > 0 && h[j] > h[i]) return false;
  return true;
}

HeightFunction reverse_at(const McKayGraph& graph, const HeightFunction& h, std::size_t i, Direction dir) {
  if (i >= h.size()) throw Error(ErrorKind::Domain, "vertex " + std::to_string(i) + " out of range");
  HeightFunction out = h;
  if (dir == Direction::Plus) {
    if (!is_sink(graph, h, i)) throw Error(ErrorKind::NotASink, "vertex " + std::to_string(i) + " is not a sink");
    out[i] += 2;
  } else {
    if (!is_source(graph, h, i))
      throw Error(ErrorKind::NotASource, "vertex " + std::to_string(i) + " is not a source");
    out[i] -= 2;
  }
  return out;
}

long height_distance(const HeightFunction& a, const HeightFunction& b) {
  long d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::labs(a[i] - b[i]);
  return d;
}

std::vector<Reversal> connect_heights(const McKayGraph& graph, const HeightFunction& h,
                                      const HeightFunction& target) {
  validate_height(graph, h);
  validate_height(graph, target);
  long dist = height_distance(h, target);
  if (dist % 2 != 0) throw Error(ErrorKind::InternalError, "odd distance between height functions");
  std::vector<Reversal> steps;
  HeightFunction cur = h;
  auto applicable = [&](std::size_t i) {
    return (cur[i] < target[i] && is_sink(graph, cur, i)) || (cur[i] > target[i] && is_source(graph, cur, i));
  };
  while (dist > 0) {
    std::vector<std::size_t> round;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (applicable(i)) round.push_back(i);
    if (round.empty()) throw Error(ErrorKind::InternalError, "no applicable reversal");
    for (auto i : round) {
      if (!applicable(i)) continue;
      Direction d = cur[i] < target[i] ? Direction::Plus : Direction::Minus;
      cur[i] += d == Direction::Plus ? 2 : -2;
      steps.push_back({i, d});
      validate_height(graph, cur);
      long nd = height_distance(cur, target);
      if (nd != dist - 2) throw Error(ErrorKind::InternalError, "reversal did not lower the distance by 2");
      dist = nd;
    }
  }
  return steps;
}

CoxeterWord coxeter_word(const McKayGraph& graph, const HeightFunction& h, Direction dir) {
  CoxeterWord w;
  w.direction = dir;
  for (const auto& s : connect_heights(graph, h, h.shifted(dir == Direction::Plus ? 2 : -2))) {
    if (s.dir != dir) throw Error(ErrorKind::InternalError, "Coxeter word changed direction");
    w.sequence.push_back(s.vertex);
  }
  std::vector<bool> used(graph.size(), false);
  for (auto v : w.sequence) {
    if (used[v]) throw Error(ErrorKind::InternalError, "vertex repeated in Coxeter word");
    used[v] = true;
  }
  if (w.sequence.size() != graph.size()) throw Error(ErrorKind::InternalError, "Coxeter word misses a vertex");
  return w;
}

}  // namespace mckay
