#pragma once

#include "cyclogt/categories.hpp"
#include "cyclogt/solve.hpp"

#include "json.hpp"

namespace cyclogt {

using Json = nlohmann::ordered_json;

std::string library_version();

// {"alphabet": [...], "N", "degree", "terms": [{"word": [...], "coeff": "p/q"}]},
// terms sorted by (degree, lexicographic word).
Json series_to_json(const Series &s);
// Labels are resolved in the target algebra, aliases included (C, B(0) for N=1, ...).
// "coeff" may be a "p/q" string or an integer; "degree" defaults to the longest word.
Series series_from_json(const Json &j, const PresentedAlgebra &target);

Json algebra_id_to_json(const AlgebraId &id);
AlgebraId algebra_id_from_json(const Json &j);

Json generator_map_to_json(const GeneratorMap &m, const AlgebraId &source, const AlgebraId &target);

// {"mode", "N", "degree", "first", "second"}; a missing component is 0 (Lie) or 1 (group).
Json pair_to_json(const PairGH &p);
PairGH pair_from_json(const Json &j);

Json residual_to_json(const std::string &relation, const std::string &variant, int N, int degree,
                      const Residual &r, bool with_residual);

Json unknown_to_json(const RelationSystem &sys, const Unknown &u);
Unknown unknown_from_json(const RelationSystem &sys, const Json &j, int degree);

// {"system", "N", "degree", "basis", "ambient_dims", "rank"} plus matrix statistics;
// the timestamp is only written when asked for, so reports stay byte-stable.
Json bundle_to_json(const RelationSystem &sys, const SolutionSpace &s, const std::vector<long> &ambient_dims,
                    bool with_timestamp);
SolutionSpace bundle_from_json(const Json &j, RelationSystem *sys_out = nullptr);

Json dims_row_to_json(const DimsRow &r);
Json axiom_reports_to_json(const std::vector<AxiomReport> &r);

} // namespace cyclogt
