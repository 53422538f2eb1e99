#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qgrass/families.hpp"
#include "qgrass/qcalc.hpp"

namespace qgrass {

// Family file schema:
//   {"q": 2, "n": 5, "k": 2, "subspaces": [[[1,0,0,0,1],[0,1,0,0,0]], ...]}
// Rows are entries in 0..q-1 and need not arrive reduced; the loader
// canonicalizes each basis and rejects rank-deficient ones. Serialization
// always emits canonical RREF rows in canonical family order, so
// load(save(fam)) == fam and save(load(text)) is byte-stable.

nlohmann::ordered_json subspace_to_rows(const Subspace& s);
Subspace subspace_from_rows(const Ambient& amb, const nlohmann::json& rows);

nlohmann::ordered_json family_to_json(const Family& fam);
Family family_from_json(const nlohmann::json& j);

void save_family(const std::string& path, const Family& fam);
Family load_family(const std::string& path);

// Sequence traces are stored as indices into the two (canonically ordered)
// source families plus the survivor counts, so a trace file is meaningful
// only next to its family files.
nlohmann::ordered_json trace_to_json(const SequenceTrace& tr, const Family& f,
                                     const Family& g);

nlohmann::ordered_json point_to_json(const ParamPoint& p);
ParamPoint point_from_json(const nlohmann::json& j);

// Grid file: JSON array of parameter points.
std::vector<ParamPoint> points_from_json(const nlohmann::json& j);
std::vector<ParamPoint> load_points(const std::string& path);

nlohmann::ordered_json verdict_to_json(const LemmaVerdict& v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& body);

} // namespace qgrass
