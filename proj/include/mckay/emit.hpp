#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mckay/ar_quiver.hpp"
#include "mckay/characters.hpp"
#include "mckay/kgroup.hpp"
#include "mckay/quiver_rep.hpp"
#include "mckay/root_lattice.hpp"
#include "mckay/su2_group.hpp"
#include "mckay/verify.hpp"

namespace mckay {

using Json = nlohmann::ordered_json;

// Every document carries "schema": 1. Rationals are "p/q" strings and
// cyclotomic numbers are {"conductor": m, "coeffs": {"k": "p/q"}} over
// powers of zeta_m.
Json cyclo_json(const CycloNum& x);
Json matrix_json(const Matrix& m);
Json root_json(const RootVector& v);

Json group_json(const FiniteSubgroup& group, const CharacterTable& table);
Json mckay_json(const McKayGraph& graph);
Json roots_json(const McKayGraph& graph, const std::vector<Root>& roots, long max_level, long bound);
Json heights_json(const HeightFunction& from, const HeightFunction& to, const std::vector<Reversal>& steps);
Json hom_table_json(const HomTable& table);
Json rphi_json(const HeightFunction& h, const std::vector<RootVector>& images);
Json rep_json(const QuiverRep& m);
Json report_json(const GroupSpec& spec, const std::vector<SuiteReport>& reports);

// Undirected McKay graph, vertices labeled with index, dimension and parity.
std::string mckay_dot(const McKayGraph& graph);
// Window of Q^ with one rank per level.
std::string ar_window_dot(const ARWindow& window);

}  // namespace mckay
