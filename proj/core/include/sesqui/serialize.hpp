#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sesqui/automaton.hpp"
#include "sesqui/columns.hpp"
#include "sesqui/correct.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/tables.hpp"
#include "sesqui/window.hpp"
#include "sesqui/zprobe.hpp"

namespace sesqui {

using nlohmann::json;

// Sheared families are read along columns of the 2-D word; recorded in
// every output that depends on the shear.
inline constexpr std::string_view kShearOrientation = "transpose";

void to_json(json& j, const Window& w);
void to_json(json& j, const PairSet& p);
void to_json(json& j, const HTable& t);
void to_json(json& j, const VTable& t);
void to_json(json& j, const Violation& v);
void to_json(json& j, const TableFamilyReport& r);
void to_json(json& j, const Digraph& g);
void to_json(json& j, const FoldMap& f);
void to_json(json& j, const PartialAutomaton& a);
void to_json(json& j, const Dfa& d);
void to_json(json& j, const KernelReport& k);
void to_json(json& j, const AutomatonSummary& s);
void to_json(json& j, const ColumnLemmaReport& r);
void to_json(json& j, const DeterminismReport& r);
void to_json(json& j, const ZeroColumnReport& r);
void to_json(json& j, const BijectionReport& r);
void to_json(json& j, const ColumnConstraint& c);
void to_json(json& j, const ProbeResult& r);
void to_json(json& j, const CertificateCheck& c);
void to_json(json& j, const ShiftReport& r);

// Vertex map between two graphs as label -> label.
json labeled_map(const Digraph& from, const Digraph& to, const std::vector<int>& map);

// One record per line, header first; fields never contain commas.
std::string windows_csv(const std::vector<Window>& ws);
std::string tables_csv(const std::vector<HTable>& ts);
std::string edges_csv(const Digraph& g);
std::string transitions_csv(const PartialAutomaton& a);
std::string transitions_csv(const Dfa& d);
std::string summaries_csv(const std::vector<AutomatonSummary>& rows);
std::string probe_csv(const ProbeResult& r);

}  // namespace sesqui
