#pragma once

#include <string>
#include <vector>

#include "fuzz.hpp"
#include "json.hpp"
#include "pirank/adjunction.hpp"
#include "pirank/prank.hpp"
#include "pirank/stacking.hpp"
#include "pirank/twocomplex.hpp"

namespace pirank::report {

using nlohmann::json;

struct Hypothesis {
  std::string name;
  bool holds = false;
};
json checklist_json(const std::vector<Hypothesis>& items);
std::string checklist_text(const std::vector<Hypothesis>& items);

// Generators of a based subgroup graph as words in the ambient basis.
std::string generators(const LabeledGraph& g);

json rank_json(const PrimitivityRankReport& r, int rank);
std::string rank_text(const PrimitivityRankReport& r, int rank);

std::vector<Hypothesis> stacking_hypotheses(const Word& w);
json stacking_json(const Word& w, int rank, const Stacking& st);
std::string stacking_text(const Word& w, int rank, const Stacking& st);

std::vector<Hypothesis> dependence_hypotheses(const DependenceTheoremReport& r);
json dependence_json(const DependenceTheoremReport& r);
std::string dependence_text(const DependenceTheoremReport& r);

std::vector<Hypothesis> pushout_hypotheses(const PushoutInequalityReport& r);
json pushout_json(const PushoutInequalityReport& r, const PushoutResult* p);
std::string pushout_text(const PushoutInequalityReport& r, const PushoutResult* p);

json classification_json(const ClassificationResult& c, const PrimitivityRankReport& pr);
std::string classification_text(const ClassificationResult& c, const PrimitivityRankReport& pr);

json fuzz_json(const fuzz::FuzzSummary& s);
std::string fuzz_text(const fuzz::FuzzSummary& s);

}  // namespace pirank::report
