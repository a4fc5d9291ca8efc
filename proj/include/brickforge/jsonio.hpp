#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "brickforge/generator.hpp"
#include "brickforge/multigraph.hpp"
#include "brickforge/nearbip.hpp"
#include "brickforge/retractthin.hpp"
#include "brickforge/tightcut.hpp"

namespace brickforge {

struct EdgeClassification {
  int id = -1, u = -1, v = -1;
  bool removable = false;
  bool b_invariant = false;
  bool in_doubleton = false;
  bool r_compatible = false;
  bool r_thin = false;
  std::optional<int> index;
  std::optional<int> rank;
};

struct AnalysisReport {
  int n = 0, m = 0;
  bool matching_covered = false;
  bool bicritical = false;
  bool brick = false;
  bool bipartite = false;
  bool near_bipartite = false;
  std::optional<int> b;
  std::vector<std::pair<int, int>> doubletons;            // edge id pairs
  std::optional<std::pair<int, int>> selected_doubleton;  // drives the R-columns
  std::vector<EdgeClassification> edges;
};

// Full classification; the R-dependent columns use the selected doubleton
// (lexicographically least when absent and G has one).
AnalysisReport make_analysis_report(const Multigraph& g,
                                    std::optional<std::pair<int, int>> doubleton = {});

using nlohmann::json;

void to_json(json& j, const Multigraph& g);
void from_json(const json& j, Multigraph& g);

void to_json(json& j, const Doubleton& r);
void from_json(const json& j, Doubleton& r);

void to_json(json& j, const EdgeClassification& c);
void from_json(const json& j, EdgeClassification& c);

void to_json(json& j, const AnalysisReport& r);
void from_json(const json& j, AnalysisReport& r);

void to_json(json& j, const DecompositionPiece& p);
void from_json(const json& j, DecompositionPiece& p);

void to_json(json& j, const DecompositionResult& r);
void from_json(const json& j, DecompositionResult& r);

void to_json(json& j, const ThreeCaseReport& r);
void from_json(const json& j, ThreeCaseReport& r);

void to_json(json& j, const MatchingCandidateReport& r);
void from_json(const json& j, MatchingCandidateReport& r);

void to_json(json& j, const EqualRankReport& r);
void from_json(const json& j, EqualRankReport& r);

void to_json(json& j, const ReductionStep& s);
void from_json(const json& j, ReductionStep& s);

void to_json(json& j, const ReductionSequence& s);
void from_json(const json& j, ReductionSequence& s);

// catalog index: canonical keys, stats, doubletons, provenance per entry
json catalog_index(const std::vector<CatalogEntry>& entries);

}  // namespace brickforge
