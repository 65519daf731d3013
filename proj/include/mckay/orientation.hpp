#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/mckay_graph.hpp"

namespace mckay {

// h: I -> Z with |h(i) - h(j)| = 1 across edges and h(i) = p(i) mod 2.
struct HeightFunction {
  std::vector<long> values;

  std::size_t size() const { return values.size(); }
  long operator[](std::size_t i) const { return values[i]; }
  long& operator[](std::size_t i) { return values[i]; }
  HeightFunction shifted(long c) const;
  std::string to_string() const;  // "i0=0,i1=1,..."
  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

enum class Direction { Plus, Minus };

inline char to_char(Direction d) { return d == Direction::Plus ? '+' : '-'; }

// h(i) = p(i).
HeightFunction standard_height(const McKayGraph& graph);

// Throws Constraint naming the first offending vertex or edge.
void validate_height(const McKayGraph& graph, const HeightFunction& h);

// "std", "i0=0,i1=1,..." (every vertex once) or a bare list "0,1,0,...".
HeightFunction parse_height(const McKayGraph& graph, const std::string& text);

struct Edge {
  std::size_t u = 0, v = 0;  // u < v
  int copy = 0;              // index among parallel edges
};

struct Arrow {
  std::size_t source = 0, target = 0;
};

// Q_h. Arrow k lies over edge k of edges(graph); i -> j iff h(j) = h(i) - 1.
class OrientedQuiver {
 public:
  OrientedQuiver() = default;
  OrientedQuiver(const McKayGraph& graph, HeightFunction h);

  std::size_t num_vertices() const { return h_.size(); }
  const HeightFunction& height() const { return h_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t k) const { return arrows_[k]; }
  std::vector<std::size_t> arrows_into(std::size_t i) const;
  std::vector<std::size_t> arrows_out_of(std::size_t i) const;
  bool is_sink(std::size_t i) const;
  bool is_source(std::size_t i) const;
  bool same_orientation(const OrientedQuiver& other) const;

 private:
  HeightFunction h_;
  std::vector<Arrow> arrows_;
};

// One entry per edge with multiplicity, ordered by (u, v, copy).
std::vector<Edge> edges(const McKayGraph& graph);

OrientedQuiver orient(const McKayGraph& graph, const HeightFunction& h);

bool is_sink(const McKayGraph& graph, const HeightFunction& h, std::size_t i);
bool is_source(const McKayGraph& graph, const HeightFunction& h, std::size_t i);

// s_i^+ (i a sink, h(i) += 2) or s_i^- (i a source, h(i) -= 2).
HeightFunction reverse_at(const McKayGraph& graph, const HeightFunction& h, std::size_t i, Direction dir);

struct Reversal {
  std::size_t vertex = 0;
  Direction dir = Direction::Plus;
  friend bool operator==(const Reversal&, const Reversal&) = default;
};

long height_distance(const HeightFunction& a, const HeightFunction& b);

// Reversals taking h to target, each lowering the distance by 2. Works in
// rounds: the vertices applicable at the start of a round (a sink with
// h < target or a source with h > target) are taken in increasing order,
// each rechecked just before it is used.
std::vector<Reversal> connect_heights(const McKayGraph& graph, const HeightFunction& h,
                                      const HeightFunction& target);

struct CoxeterWord {
  std::vector<std::size_t> sequence;  // in order of application
  Direction direction = Direction::Plus;
};

// connect_heights(h, h +- 2).
CoxeterWord coxeter_word(const McKayGraph& graph, const HeightFunction& h, Direction dir);

}  // namespace mckay
