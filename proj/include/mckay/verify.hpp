#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mckay/ar_quiver.hpp"
#include "mckay/characters.hpp"
#include "mckay/mckay_graph.hpp"
#include "mckay/orientation.hpp"
#include "mckay/su2_group.hpp"

namespace mckay {

// Group, characters, McKay graph and Hom engine for one group. The engine
// points into the other members, so a Pipeline is pinned in memory.
struct Pipeline {
  explicit Pipeline(const GroupSpec& spec, std::size_t max_order = default_max_order());
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  GroupSpec spec;
  FiniteSubgroup group;
  CharacterTable table;
  McKayGraph graph;
  HomEngine engine;
};

std::unique_ptr<Pipeline> make_pipeline(const std::string& spec);

// Random walk of elementary reversals from h.
HeightFunction random_height(const McKayGraph& graph, const HeightFunction& h, std::size_t steps, std::mt19937& rng);

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool skipped = false;
  std::string note;

  bool ok() const { return failures.empty(); }
  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
};

// characters, mckay, mesh, ktheory, coxeter, cg, an
const std::vector<std::string>& suite_names();

// Runs one suite; "all" is expanded by the caller. The an suite throws
// UnsupportedGroup outside the binary cyclic family unless skip_unsupported.
SuiteReport run_suite(const Pipeline& p, const std::string& suite, bool skip_unsupported = false);

}  // namespace mckay
