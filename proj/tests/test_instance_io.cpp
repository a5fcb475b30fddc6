#include "support.hpp"

#include <dpcolor/constructions.hpp>
#include <dpcolor/instance_io.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

using namespace dpc;

namespace {

int error_line(const std::string &text) {
    try {
        parse_instance(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

std::string error_text(const std::string &text) {
    try {
        parse_instance(text);
    } catch (const ParseError &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("signed K2") {
    auto p = parse_instance("dpgraph 1\nparams i=1 j=2\nvertices 2\nedge 0 1 P\n");
    CHECK(p.instance.graph() == SimpleGraph(2, {{0, 1}}));
    CHECK(p.instance.params() == DefectParams{1, 2});
    CHECK(p.instance.capacity(0) == Capacity{1, 2});
    CHECK(p.instance.capacity(1) == Capacity{1, 2});
    REQUIRE(p.signing.has_value());
    CHECK(p.signing->to_string() == "P");
}

TEST_CASE("single vertex with capacity line and no signing") {
    auto p = parse_instance("dpgraph 1\nparams i=1 j=2\nvertices 1\ncap 0 -1 -1\n");
    CHECK(p.instance.graph().vertex_count() == 1);
    CHECK(p.instance.capacity(0) == Capacity{-1, -1});
    CHECK_FALSE(p.signing.has_value());
}

TEST_CASE("comments and blank lines are skipped") {
    auto p = parse_instance("# header\n\ndpgraph 1\nparams i=0 j=1  # trailing\nvertices 3\n\nedge 2 0\n");
    CHECK(p.instance.graph().edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("errors carry the line number") {
    const std::string head = "dpgraph 1\nparams i=1 j=2\nvertices 3\n";
    CHECK(error_line(head + "edge 0 1 P\nedge 0 0 P\n") == 5);
    CHECK(error_text(head + "edge 0 0 P\n").find("loop") != std::string::npos);
    CHECK(error_line(head + "edge 0 3\n") == 4);
    CHECK(error_line(head + "edge 0 1\nedge 1 2\nedge 1 0\n") == 6);
    CHECK(error_line(head + "edge 0 1 P\nedge 1 2\n") == 5);
    CHECK(error_line(head + "edge 0 1 X\n") == 4);
    CHECK(error_line(head + "cap 0 2 0\n") == 4);
    CHECK(error_line(head + "cap 0 0 -2\n") == 4);
    CHECK(error_line(head + "cap 1 0 0\ncap 1 1 1\n") == 5);
    CHECK(error_line(head + "cap 0 0 x\n") == 4);
    CHECK(error_line(head + "colour 0 P\n") == 4);
    CHECK(error_line("params i=1 j=2\n") == 1);
    CHECK(error_line("dpgraph 2\n") == 1);
    CHECK(error_line("dpgraph 1\nparams i=2 j=1\n") == 2);
    CHECK(error_line("dpgraph 1\nparams i=1 j=2\nparams i=1 j=2\n") == 3);
    CHECK(error_line("dpgraph 1\nvertices 2\nvertices 2\n") == 3);
    CHECK(error_line("dpgraph 1\nparams i=1 j=2\nedge 0 1\n") == 3);
    CHECK(error_line("dpgraph 1\nparams i=1 j=2\n") > 0);
    CHECK(error_line("") > 0);
}

TEST_CASE("serialize then parse is the identity on a random corpus") {
    test::Rng rng(5);
    for (int round = 0; round < 300; ++round) {
        auto inst = test::random_instance(rng, 0, 9);
        std::optional<CoverSigning> s;
        if (round % 2 && inst.graph().edge_count() > 0)
            s = test::random_signing(rng, inst.graph().edge_count());
        auto text = serialize_instance(inst, s);
        auto back = parse_instance(text);
        CHECK(back.instance == inst);
        CHECK(back.signing == s);
        CHECK(serialize_instance(back.instance, back.signing) == text);
    }
}

TEST_CASE("serialization of a construction round-trips with its bad cover") {
    auto [g, spec] = make_gm({1, 2}, 2);
    auto inst = gm_instance(g, spec);
    auto s = make_hm(g, spec);
    auto back = parse_instance(serialize_instance(inst, s));
    CHECK(back.instance == inst);
    CHECK(back.signing == s);
}

TEST_CASE("an edgeless graph reads back unsigned") {
    WeightedInstance lone(SimpleGraph(2), {0, 1});
    CHECK_FALSE(parse_instance(serialize_instance(lone, CoverSigning())).signing.has_value());
}

TEST_CASE("digest depends on content only") {
    SimpleGraph a(3, {{0, 1}, {1, 2}});
    SimpleGraph b(3, {{2, 1}, {1, 0}});
    auto da = instance_digest(WeightedInstance(a, {1, 2}));
    CHECK(da.size() == 16);
    CHECK(da == instance_digest(WeightedInstance(b, {1, 2})));
    CHECK(da != instance_digest(WeightedInstance(a, {1, 3})));
    CHECK(da != instance_digest(WeightedInstance(a, {1, 2}), CoverSigning::all(2, Sign::Parallel)));
}

TEST_CASE("file helpers") {
    auto path = (std::filesystem::temp_directory_path() / "dpcolor_io_test.dpg").string();
    WeightedInstance inst(SimpleGraph(2, {{0, 1}}), {0, 1}, {{0, 1}, {-1, 0}});
    write_instance_file(path, inst, CoverSigning::all(1, Sign::Twisted));
    auto back = read_instance_file(path);
    CHECK(back.instance == inst);
    CHECK(back.signing->to_string() == "T");
    std::remove(path.c_str());
    CHECK_THROWS(read_instance_file(path));
}
