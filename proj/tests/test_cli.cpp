#include <cli.hpp>
#include <dpcolor/instance_io.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dpc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text = "") {
    auto path = (std::filesystem::temp_directory_path() / name).string();
    if (!text.empty())
        std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("construct then solve reports no coloring") {
    auto path = temp_file("dpcolor_cli_g1.dpg");
    auto c = run({"construct", "--i", "1", "--j", "2", "--m", "1", "--cover", "-o", path});
    CHECK(c.code == 0);
    auto parsed = read_instance_file(path);
    CHECK(parsed.instance.graph().vertex_count() == 16);
    CHECK(parsed.signing.has_value());
    auto s = run({"solve", path});
    CHECK(s.code == 1);
    CHECK(s.out.find("not colorable") != std::string::npos);
}

TEST_CASE("solve on a parallel edge prints a map") {
    auto path = temp_file("dpcolor_cli_k2.dpg", "dpgraph 1\nparams i=0 j=0\nvertices 2\nedge 0 1 P\n");
    auto r = run({"solve", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("map ") != std::string::npos);
    auto j = nlohmann::json::parse(run({"--json", "solve", path}).out);
    CHECK(j["command"] == "solve");
    CHECK(j["verdict"] == "colorable");
    CHECK(j["wall_time_ms"].is_null());
    CHECK(j["counters"].contains("nodes_expanded"));
    CHECK(j["params"]["i"] == 0);
    auto timed = nlohmann::json::parse(run({"--json", "--timing", "solve", path}).out);
    CHECK(timed["wall_time_ms"].is_number());
}

TEST_CASE("check reports the violation") {
    auto path = temp_file("dpcolor_cli_k2p.dpg", "dpgraph 1\nparams i=0 j=0\nvertices 2\nedge 0 1 P\n");
    auto bad = run({"check", path, "--map", "PP"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("vertex 0") != std::string::npos);
    auto j = nlohmann::json::parse(run({"--json", "check", path, "--map", "PP"}).out);
    CHECK(j["violation"]["defect"] == 1);
    CHECK(j["violation"]["capacity"] == 0);
    CHECK(run({"check", path, "--map", "PR"}).code == 0);
    CHECK(run({"check", path, "--map", "PX"}).code == 2);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"solve"}).code == 2);
    auto missing = run({"solve", "/nonexistent/file.dpg"});
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.err.empty());
    auto path = temp_file("dpcolor_cli_bad.dpg", "dpgraph 1\nparams i=1 j=2\nvertices 2\nedge 0 0 P\n");
    auto bad = run({"solve", path});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 4") != std::string::npos);
    CHECK(run({"critical", "--strategy", "bogus", "--i", "1", "--j", "2", "--m", "1"}).code == 2);
    CHECK(run({"critical"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("potential, charges and sparsity") {
    auto path = temp_file("dpcolor_cli_g1b.dpg");
    run({"construct", "--i", "1", "--j", "2", "--m", "1", "-o", path});
    auto p = nlohmann::json::parse(run({"--json", "potential", path}).out);
    CHECK(p["potential"] == -2);
    CHECK(p["minimum"]["potential"] == -2);
    auto ch = run({"--json", "charges", path});
    CHECK(ch.code == 0);
    CHECK(nlohmann::json::parse(ch.out)["doubled_residual"] == 0);
    auto sp = run({"--json", "sparsity", path});
    CHECK(sp.code == 1);
    CHECK(nlohmann::json::parse(sp.out)["witness"]["excess"] == 1);
}

TEST_CASE("critical, enumerate and verify") {
    auto path = temp_file("dpcolor_cli_tri.dpg",
                          "dpgraph 1\nparams i=0 j=0\nvertices 3\nedge 0 1\nedge 1 2\nedge 0 2\n");
    CHECK(run({"critical", path}).code == 0);
    CHECK(run({"critical", path, "--strategy", "sampled", "--count", "100"}).code == 1);
    CHECK(run({"critical", path, "--strategy", "reduced"}).code == 2);
    auto e = run({"--json", "enumerate", "--i", "1", "--j", "2", "--n", "3"});
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["verdict"] == "consistent");
    auto v = run({"verify", "--pairs", "1,2;1,3", "--ms", "1"});
    CHECK(v.code == 0);
    CHECK(run({"verify", "--pairs", "1", "--ms", "1"}).code == 2);
}

TEST_CASE("JSON reports repeat byte for byte") {
    std::vector<std::string> args{"--json", "critical", "--i", "1", "--j", "2", "--m", "1", "--strategy", "sampled",
                                  "--count", "500", "--seed", "7"};
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    auto threads = args;
    threads.insert(threads.begin(), {"--threads", "3"});
    CHECK(run(threads).out == a.out);
    CHECK(a.code == 1);
    CHECK(nlohmann::json::parse(a.out)["verdict"] == "unrefuted");
}
