#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qmirror/enumerate.hpp"
#include "qmirror/matrixfact.hpp"
#include "qmirror/mpoly.hpp"
#include "qmirror/potential.hpp"
#include "qmirror/qseries.hpp"

namespace qmirror {

// Stable file formats.  Writers share dump_json so two producers of the same
// value emit identical bytes; every reader inverts its writer exactly.

using Json = nlohmann::ordered_json;

Json rat_pair(const Rat& r);
Rat rat_unpair(const Json& j);

Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

Json mpoly_to_json(const MPoly<Rat>& p);
Json mpoly_to_json(const MPoly<QSeries>& p);
MPoly<Rat> mpoly_rat_from_json(const Json& j);
MPoly<QSeries> mpoly_qs_from_json(const Json& j);

Json potential_to_json(const Potential& w);
Potential potential_from_json(const Json& j);

Json mf_to_json(const MatrixFact<QSeries>& m);
MatrixFact<QSeries> mf_from_json(const Json& j);

Json polygons_to_json(const std::vector<Polygon>& polys);
std::vector<Polygon> polygons_from_json(const Json& j);

std::string dump_json(const Json& j);
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace qmirror
