#pragma once

#include <string>

#include "knotpad/diagram.hpp"
#include "knotpad/group.hpp"
#include "knotpad/plat.hpp"
#include "knotpad/reduce_alt.hpp"
#include "knotpad/reduce_plat.hpp"
#include "knotpad/theory.hpp"

namespace knotpad {

// Compact JSON documents, newline-terminated. Parsers throw ParseError for
// malformed input and NotAKnotError for multi-component diagrams.
std::string serialize_pd(const Diagram& k);
Diagram parse_pd(const std::string& text);

std::string serialize_plat(const PlatDiagram& p);
PlatDiagram parse_plat(const std::string& text);

std::string serialize_group(const GroupClass& gc);
GroupClass parse_group(const std::string& text, const std::string& name = "file");

// Either document kind, by its "type" field.
struct KnotDocument {
    enum class Kind { pd, plat } kind = Kind::pd;
    Diagram diagram;  // also filled (expanded) for plats
    PlatDiagram plat;
};
KnotDocument parse_knot_document(const std::string& text);

std::string alt_report_json(const AltReductionReport& rep, const Theory& th);
std::string plat_report_json(const PlatReductionReport& rep, const Theory& th);
std::string certification_json(const PlatDiagram& p, const PlatCertification& c);

}  // namespace knotpad
