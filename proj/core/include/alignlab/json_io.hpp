#pragma once

#include <string>

#include "alignlab/alignment.hpp"
#include "alignlab/bounds.hpp"
#include "alignlab/equivalence.hpp"
#include "alignlab/experiments.hpp"
#include "alignlab/model.hpp"

namespace alignlab {

// JSON surfaces. Graph schema:
//   {"n": int, "m": int, "user_edges": [[i,j],...] with i<j, "attr_edges": [[i,a],...]}
// Distribution schema: {"p11":..., "p10":..., "p01":..., "p00":...}.
// All floats carry 9 significant digits.

std::string graph_to_json(const AttributedGraph& g);
AttributedGraph graph_from_json(const std::string& text);

std::string distribution_to_json(const JointEdgeDistribution& d);
JointEdgeDistribution distribution_from_json(const std::string& text);

std::string margin_report_to_json(const MarginReport& report);
std::string equiv_stats_to_json(const EquivStats& stats);
std::string alignment_outcome_to_json(const AlignmentOutcome& outcome);
std::string cell_result_to_json(const CellResult& cell);

/// Sweep configuration, e.g.
///   {"n": [7], "m": {"start": 2, "stop": 6, "steps": 3},
///    "p": [[p11,p10,p01,p00]], "q": [[...], ...],
///    "trials": 2000, "seed": 1, "cap": 9, "eps": 0.0}
/// Scalar grids accept an explicit list or a {start, stop, steps} range.
SweepSpec sweep_spec_from_json(const std::string& text);

/// Round-trips a double through 9-significant-digit decimal.
double round9(double v);

}  // namespace alignlab
