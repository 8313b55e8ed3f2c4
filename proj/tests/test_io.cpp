#include <gtest/gtest.h>

#include <regex>

#include "knotpad/corpus.hpp"
#include "knotpad/errors.hpp"
#include "knotpad/json_io.hpp"
#include "knotpad/render.hpp"
#include "oracles.hpp"

using namespace knotpad;

TEST(Io, PdRoundTripOverCorpus) {
    for (const auto& e : corpus()) {
        const auto text = serialize_pd(e.diagram);
        const auto back = parse_pd(text);
        EXPECT_EQ(back.to_pd(), e.diagram.to_pd()) << e.name;
        EXPECT_EQ(serialize_pd(back), text) << e.name;
    }
}

TEST(Io, PlatRoundTripOverCorpus) {
    int plats = 0;
    for (const auto& e : corpus()) {
        if (!e.plat) continue;
        ++plats;
        const auto text = serialize_plat(*e.plat);
        EXPECT_EQ(parse_plat(text), *e.plat) << e.name;
        const auto doc = parse_knot_document(text);
        EXPECT_EQ(doc.kind, KnotDocument::Kind::plat);
        EXPECT_EQ(doc.diagram.to_pd(), e.diagram.to_pd()) << e.name;
    }
    EXPECT_EQ(plats, kCorpusRandomPlats);
}

TEST(Io, TextbookPdIsReadVerbatim) {
    const std::string text = R"({"type":"pd","crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]})";
    const auto k = parse_pd(text);
    EXPECT_EQ(k.to_pd(), oracle::trefoil_left_pd());
    EXPECT_EQ(k.writhe(), -3);
}

TEST(Io, GroupRoundTrip) {
    for (const auto& name : group_preset_names()) {
        const auto gc = group_preset(name);
        const auto back = parse_group(serialize_group(gc), name);
        EXPECT_EQ(back.group.table(), gc.group.table()) << name;
        EXPECT_EQ(back.klass, gc.klass) << name;
    }
}

TEST(Io, MalformedInputsAreParseErrors) {
    const std::vector<std::string> bad{
        "",
        "{",
        "[1,2,3]",
        R"({"crossings":[]})",
        R"({"type":"pd"})",
        R"({"type":"pd","crossings":[]})",
        R"({"type":"pd","crossings":[[1,2,3]]})",
        R"({"type":"pd","crossings":[[1,2,3,"x"]]})",
        R"({"type":"pd","crossings":[[1,1,1,1],[2,2,2,2]]})",
        R"({"type":"pd","crossings":[[1,4,2,5]],"unknot":true})",
        R"({"type":"plat","m":0,"rows":[]})",
        R"({"type":"plat","m":2,"rows":[[1,2]]})",
        R"({"type":"group","order":2,"table":[[0,1],[1,1]],"class":[1]})",
        R"({"type":"knot"})",
    };
    for (const auto& text : bad) {
        EXPECT_THROW(
            {
                if (text.find("\"group\"") != std::string::npos)
                    parse_group(text);
                else
                    parse_knot_document(text);
            },
            ParseError)
            << text;
    }
}

TEST(Io, EmptyCrossingListNeedsUnknotFlag) {
    const auto k = parse_pd(R"({"type":"pd","crossings":[],"unknot":true})");
    EXPECT_EQ(k.crossing_count(), 0);
    EXPECT_EQ(serialize_pd(k), "{\"type\":\"pd\",\"crossings\":[],\"unknot\":true}\n");
}

TEST(Io, LinksAreRejected) {
    const std::string hopf = R"({"type":"pd","crossings":[[4,1,3,2],[2,3,1,4]]})";
    EXPECT_THROW(parse_pd(hopf), NotAKnotError);
    // a 2-plat with a single zero row closes to a two-component unlink
    EXPECT_THROW(parse_knot_document(R"({"type":"plat","m":2,"rows":[[0]]})"), NotAKnotError);
}

TEST(Render, PlatAsciiShowsEveryBox) {
    const auto& e = corpus_entry("plat_0");
    const auto text = render_plat_ascii(*e.plat);
    std::size_t boxes = 0;
    for (char c : text) boxes += c == '[';
    std::size_t regions = 0;
    for (const auto& r : e.plat->rows) regions += r.size();
    EXPECT_EQ(boxes, regions);
    EXPECT_EQ(text, render_plat_ascii(*e.plat));
}

TEST(Render, PlatSvgLabelsEveryCoefficient) {
    PlatDiagram p;
    p.m = 3;
    p.rows = {{3, -4}, {5, 6, -7}, {8, 9}};
    const auto svg = render_plat_svg(p);
    EXPECT_NE(svg.find("a1,2=-4"), std::string::npos);
    EXPECT_NE(svg.find("a2,3=-7"), std::string::npos);
    EXPECT_NE(svg.find("a3,1=8"), std::string::npos);
    const std::regex rect("<rect ");
    EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), rect), std::sregex_iterator()), 7);
    EXPECT_EQ(svg, render_plat_svg(p));
}

TEST(Render, PdSvgDrawsOnePolylinePerEdge) {
    for (const char* name : {"unknot", "3_1_left", "4_1", "6_1", "granny"}) {
        const auto& k = corpus_entry(name).diagram;
        const auto svg = render_pd_svg(k);
        const std::regex line("<polyline ");
        const auto count = std::distance(std::sregex_iterator(svg.begin(), svg.end(), line), std::sregex_iterator());
        EXPECT_EQ(count, k.edge_count()) << name;
        EXPECT_EQ(svg, render_pd_svg(k)) << name;
        EXPECT_EQ(svg.find("nan"), std::string::npos) << name;
    }
}
