#include "reesgraph/report.hpp"

#include <json.hpp>

namespace rees {

namespace {

using nlohmann::json;

json labels_1based(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

json ext_nat_json(const ExtNat& n) {
  if (n.infinite) return json("inf");
  return json(n.value);
}

json component_json(const ComponentDescriptor& d, long diameter) {
  json out;
  switch (d.kind) {
    case ComponentDescriptor::Kind::Single:
      out["kind"] = "single";
      out["cols"] = labels_1based(d.q.cols);
      out["rows"] = labels_1based(d.q.rows);
      break;
    case ComponentDescriptor::Kind::Pair:
      out["kind"] = "pair";
      out["q"] = {{"cols", labels_1based(d.q.cols)}, {"rows", labels_1based(d.q.rows)}};
      out["m"] = {{"cols", labels_1based(d.m.cols)}, {"rows", labels_1based(d.m.rows)}};
      break;
    case ComponentDescriptor::Kind::Star:
      out["kind"] = "star";
      out["col"] = d.star_col + 1;
      out["row"] = d.star_row + 1;
      break;
  }
  out["diameter"] = diameter;
  return out;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  json out;
  out["connected"] = report.connected;
  out["components"] = json::array();
  for (size_t i = 0; i < report.components.size(); ++i)
    out["components"].push_back(
        component_json(report.components[i], report.component_diameters[i]));
  out["diameter"] = ext_nat_json(report.diameter);
  out["clique_number"] = report.clique_number;
  out["girth"] = ext_nat_json(report.girth);
  out["chromatic_lower"] = report.chromatic_lower;
  out["chromatic_upper_edges"] = report.chromatic_upper_edges;
  out["chromatic_upper_degree"] = report.chromatic_upper_degree;
  if (report.knit_degree)
    out["knit_degree"] = *report.knit_degree;
  else
    out["knit_degree"] = nullptr;
  return out.dump(2) + "\n";
}

}  // namespace rees
