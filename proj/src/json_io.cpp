#include "knotpad/json_io.hpp"

#include <cstdint>

#include <json.hpp>

#include "knotpad/errors.hpp"

namespace knotpad {

using json = nlohmann::ordered_json;

namespace {

json parse_document(const std::string& text, const char* want_type) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document is not a JSON object");
    if (!doc.contains("type") || !doc["type"].is_string()) throw ParseError("missing \"type\" field");
    if (want_type && doc["type"] != want_type)
        throw ParseError("expected type \"" + std::string(want_type) + "\", got \"" +
                         doc["type"].get<std::string>() + "\"");
    return doc;
}

int as_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    const auto x = v.get<std::int64_t>();
    if (x < INT32_MIN || x > INT32_MAX) throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(x);
}

std::string finish(const json& doc) { return doc.dump() + "\n"; }

json pd_json(const Diagram& k) {
    json doc;
    doc["type"] = "pd";
    doc["crossings"] = json::array();
    for (const auto& q : k.to_pd()) doc["crossings"].push_back(q);
    if (k.crossing_count() == 0) doc["unknot"] = true;
    return doc;
}

json plat_json(const PlatDiagram& p) {
    json doc;
    doc["type"] = "plat";
    doc["m"] = p.m;
    doc["rows"] = p.rows;
    return doc;
}

Diagram pd_from(const json& doc) {
    if (!doc.contains("crossings") || !doc["crossings"].is_array()) throw ParseError("missing \"crossings\" array");
    std::vector<std::array<int, 4>> quads;
    for (const auto& q : doc["crossings"]) {
        if (!q.is_array() || q.size() != 4) throw ParseError("each crossing must list four edge labels");
        std::array<int, 4> a{};
        for (int i = 0; i < 4; ++i) a[i] = as_int(q[i], "edge label");
        quads.push_back(a);
    }
    const bool unknot = doc.contains("unknot") && doc["unknot"] == true;
    if (quads.empty()) {
        if (!unknot) throw ParseError("empty crossing list requires \"unknot\": true");
        return Diagram();
    }
    if (unknot) throw ParseError("\"unknot\" flag given with crossings");
    return Diagram::from_pd(quads);
}

PlatDiagram plat_from(const json& doc) {
    if (!doc.contains("m")) throw ParseError("missing \"m\"");
    if (!doc.contains("rows") || !doc["rows"].is_array()) throw ParseError("missing \"rows\" array");
    PlatDiagram p;
    p.m = as_int(doc["m"], "m");
    if (p.m < 1) throw ParseError("m must be positive");
    for (const auto& r : doc["rows"]) {
        if (!r.is_array()) throw ParseError("each row must be an array");
        std::vector<int> row;
        for (const auto& a : r) row.push_back(as_int(a, "twist coefficient"));
        p.rows.push_back(std::move(row));
    }
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return p;
}

json steps_json(const std::vector<ReductionStep>& steps) {
    json arr = json::array();
    for (const auto& s : steps) {
        json j;
        j["kind"] = s.kind;
        j["location"] = s.location;
        j["dwrithe"] = s.dwrithe;
        j["framing"] = s.framing;
        arr.push_back(j);
    }
    return arr;
}

json theory_json(const Theory& th) {
    json j;
    j["selector"] = th.selector;
    j["exponent"] = th.exponent;
    j["T"] = th.T;
    return j;
}

json certificates_json(const PlatCertificates& c) {
    json j;
    j["standard"] = c.standard;
    j["highly_twisted"] = c.highly_twisted;
    j["m_ge_3"] = c.m_ge_3;
    j["n_gt_bound"] = c.n_gt_bound;
    j["n_even"] = c.n_even;
    j["unique_minimal_bridge_sphere"] = c.unique_minimal_bridge_sphere;
    j["hyperbolic"] = c.hyperbolic;
    return j;
}

}  // namespace

std::string serialize_pd(const Diagram& k) { return finish(pd_json(k)); }

Diagram parse_pd(const std::string& text) { return pd_from(parse_document(text, "pd")); }

std::string serialize_plat(const PlatDiagram& p) { return finish(plat_json(p)); }

PlatDiagram parse_plat(const std::string& text) { return plat_from(parse_document(text, "plat")); }

std::string serialize_group(const GroupClass& gc) {
    json doc;
    doc["type"] = "group";
    doc["order"] = gc.group.order();
    json table = json::array();
    for (int a = 0; a < gc.group.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < gc.group.order(); ++b) row.push_back(gc.group.mul(a, b));
        table.push_back(row);
    }
    doc["table"] = table;
    doc["class"] = gc.klass;
    return finish(doc);
}

GroupClass parse_group(const std::string& text, const std::string& name) {
    const json doc = parse_document(text, "group");
    if (!doc.contains("order") || !doc.contains("table") || !doc.contains("class"))
        throw ParseError("group document needs \"order\", \"table\" and \"class\"");
    const int n = as_int(doc["order"], "order");
    if (!doc["table"].is_array() || static_cast<int>(doc["table"].size()) != n)
        throw ParseError("group table must have \"order\" rows");
    std::vector<std::vector<int>> table;
    for (const auto& r : doc["table"]) {
        if (!r.is_array()) throw ParseError("group table rows must be arrays");
        std::vector<int> row;
        for (const auto& v : r) row.push_back(as_int(v, "group table entry"));
        table.push_back(std::move(row));
    }
    std::vector<int> klass;
    if (!doc["class"].is_array()) throw ParseError("\"class\" must be an array");
    for (const auto& v : doc["class"]) klass.push_back(as_int(v, "class element"));
    try {
        return make_group_class(name, FiniteGroup(std::move(table)), std::move(klass));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

KnotDocument parse_knot_document(const std::string& text) {
    const json doc = parse_document(text, nullptr);
    KnotDocument out;
    if (doc["type"] == "pd") {
        out.kind = KnotDocument::Kind::pd;
        out.diagram = pd_from(doc);
    } else if (doc["type"] == "plat") {
        out.kind = KnotDocument::Kind::plat;
        out.plat = plat_from(doc);
        out.diagram = plat_to_pd(out.plat);
    } else {
        throw ParseError("unknown document type \"" + doc["type"].get<std::string>() + "\"");
    }
    return out;
}

std::string alt_report_json(const AltReductionReport& rep, const Theory& th) {
    json doc;
    doc["type"] = "alt_reduction_report";
    doc["theory"] = theory_json(th);
    doc["case"] = to_string(rep.kase);
    doc["r"] = rep.r;
    doc["T"] = rep.T;
    doc["summands"] = rep.summands;
    if (rep.kase != AltCase::hyperbolic) doc["torus_p"] = rep.torus_p;
    doc["crossings_before"] = rep.crossings_before;
    doc["crossings_after"] = rep.crossings_after;
    doc["steps"] = steps_json(rep.steps);
    doc["output"] = pd_json(rep.output);
    if (rep.fallback_plat) doc["fallback_plat"] = plat_json(*rep.fallback_plat);
    return finish(doc);
}

std::string plat_report_json(const PlatReductionReport& rep, const Theory& th) {
    json doc;
    doc["type"] = "plat_reduction_report";
    doc["theory"] = theory_json(th);
    doc["m"] = rep.m;
    doc["n"] = rep.n;
    doc["d"] = rep.d;
    doc["T"] = rep.T;
    doc["certificates"] = certificates_json(rep.certificates);
    doc["volume_bounds"] = {rep.volume_bounds.first, rep.volume_bounds.second};
    doc["output_alternating"] = rep.output_alternating;
    doc["crossings_before"] = rep.crossings_before;
    doc["crossings_after"] = rep.crossings_after;
    if (rep.braid.strands > 0) {
        json braid;
        braid["strands"] = rep.braid.strands;
        braid["letters"] = rep.braid.letters;
        doc["braid"] = braid;
    } else {
        doc["braid"] = nullptr;  // plat input
    }
    doc["audit"] = rep.audit;
    doc["output"] = plat_json(rep.output);
    return finish(doc);
}

std::string certification_json(const PlatDiagram& p, const PlatCertification& c) {
    json doc;
    doc["type"] = "plat_certification";
    doc["m"] = p.m;
    doc["n"] = p.n();
    doc["d"] = c.d;
    doc["certificates"] = certificates_json(c.certificates);
    doc["all"] = c.certificates.all();
    doc["volume_bounds"] = {c.volume.first, c.volume.second};
    return finish(doc);
}

}  // namespace knotpad
