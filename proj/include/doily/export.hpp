#pragma once

#include <string>
#include <vector>

namespace doily {

struct ExportPoint {
    std::string label;
    std::string group;  // empty when the object has no grouping
};

struct ExportLine {
    std::vector<int> points;
    bool negative = false;
};

struct IncidenceExport {
    std::string object;
    std::vector<ExportPoint> points;
    std::vector<ExportLine> lines;
};

std::vector<std::string> export_objects();
// doily-2q, doily-3q, troily, klein-doily, heptaly
IncidenceExport build_export(const std::string& object);

// bipartite: point nodes p<i>, line nodes l<j>, one edge per incidence
std::string to_dot(const IncidenceExport& e);
std::string to_json(const IncidenceExport& e);
IncidenceExport export_from_json(const std::string& text);

}  // namespace doily
