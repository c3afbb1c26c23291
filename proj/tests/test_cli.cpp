#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <trichrome/cli.hpp>

using namespace trichrome;
using nlohmann::json;

TEST_SUITE_BEGIN("cli");

namespace {

struct RunCapture {
    int code = 0;
    std::string out, err;
    json doc;  // parsed stdout when it is a report
};

RunCapture run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunCapture rc;
    rc.code = run(args, out, err);
    rc.out = out.str();
    rc.err = err.str();
    if (!rc.out.empty() && rc.out[0] == '{') rc.doc = json::parse(rc.out);
    return rc;
}

std::string temp_path(const std::string& name) {
    return "cli_test_" + name;
}

}  // namespace

TEST_CASE("orbits command") {
    RunCapture rc = run_cli({"orbits", "--k", "2"});
    CHECK(rc.code == 0);
    CHECK(rc.doc["result"]["count"] == 10);
    CHECK(rc.doc["schema_version"] == "1");
    CHECK(rc.doc["command"] == "orbits");

    RunCapture table = run_cli({"orbits", "--k", "1", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("rrb") != std::string::npos);
}

TEST_CASE("gen, check, h2 round trip") {
    std::string path = temp_path("grid9.txt");
    RunCapture g = run_cli({"gen", "--id", "1", "--n", "9", "--out", path});
    CHECK(g.code == 0);
    CHECK(g.doc["result"]["deterministic"] == true);

    RunCapture h = run_cli({"h2", "--coloring", path});
    CHECK(h.code == 0);
    CHECK(h.doc["result"]["h2"] == 3);
    CHECK(h.doc["result"]["s_rb"] == 3);
    CHECK(h.doc["result"]["witness"]["size"] == 3);

    RunCapture ok = run_cli({"check", "--coloring", path, "--family", "rrb,rry"});
    CHECK(ok.code == 0);
    CHECK(ok.doc["result"]["avoiding"] == true);

    // the grid contains monochromatic triangles, so this check must fail
    RunCapture bad = run_cli({"check", "--coloring", path, "--family", "BBB"});
    CHECK(bad.code == 1);
    CHECK(bad.doc["result"]["avoiding"] == false);
    CHECK(bad.doc["result"].contains("violating_triangle"));
    std::remove(path.c_str());
}

TEST_CASE("exact command") {
    RunCapture rc = run_cli({"exact", "--n", "4", "--family", "rrb"});
    CHECK(rc.code == 0);
    CHECK(rc.doc["result"]["status"] == "exact");
    CHECK(rc.doc["result"]["value"] == 2);
    CHECK(rc.doc["result"]["canonical_family"] == "rrb");

    // family strings parse case- and order-insensitively
    RunCapture rc2 = run_cli({"exact", "--n", "4", "--family", "BRR"});
    CHECK(rc2.doc["result"]["canonical_family"] == "rrb");
    CHECK(rc2.doc["result"]["value"] == 2);
}

TEST_CASE("deterministic payloads reproduce bit for bit") {
    RunCapture a = run_cli({"exact", "--n", "5", "--family", "rrb,bbr,yyr"});
    RunCapture b = run_cli({"exact", "--n", "5", "--family", "rrb,bbr,yyr"});
    CHECK(a.doc["result"] == b.doc["result"]);

    std::string p1 = temp_path("det1.txt"), p2 = temp_path("det2.txt");
    RunCapture g1 = run_cli({"gen", "--id", "17", "--n", "20", "--seed", "9", "--out", p1});
    RunCapture g2 = run_cli({"gen", "--id", "17", "--n", "20", "--seed", "9", "--out", p2});
    CHECK(g1.code == 0);
    std::ifstream f1(p1), f2(p2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("fg command") {
    RunCapture rc = run_cli({"fg", "--which", "f", "--n", "5"});
    CHECK(rc.code == 0);
    CHECK(rc.doc["result"]["value"] == 3);
    RunCapture rg = run_cli({"fg", "--which", "g", "--n", "6"});
    CHECK(rg.doc["result"]["value"] == 3);
    RunCapture bad = run_cli({"fg", "--which", "q", "--n", "5"});
    CHECK(bad.code == 2);
}

TEST_CASE("extract command on the cyclic seven-vertex coloring") {
    // write the valid orientation: swap red/blue in the generator output
    std::string path = temp_path("cyc7.txt");
    {
        EdgeColoring c = apply_color_permutation(
            generate(14, 7).coloring, ColorPermutation(Color::B, Color::R, Color::Y));
        std::ofstream f(path);
        c.write(f);
    }
    RunCapture chk = run_cli({"check", "--coloring", path, "--family", "rrb,bby,yyr"});
    CHECK(chk.code == 0);
    CHECK(chk.doc["result"]["avoiding"] == true);

    RunCapture ex = run_cli({"extract", "--coloring", path, "--family", "rrb,bby,yyr"});
    CHECK(ex.code == 0);
    CHECK(ex.doc["result"]["lemma_id"] == "mono_apex_split");
    CHECK(ex.doc["result"]["guarantee"] == 3);
    CHECK(ex.doc["result"]["witness"]["size"] >= 3);
    std::remove(path.c_str());
}

TEST_CASE("verify-constructions command") {
    RunCapture rc = run_cli({"verify-constructions", "--id", "1", "--n-min", "3", "--n-max",
                             "12"});
    CHECK(rc.code == 0);
    CHECK(rc.doc["result"]["all_ok"] == true);
    auto rows = rc.doc["result"]["constructions"][0]["rows"];
    CHECK(rows.size() == 10);
    for (const auto& row : rows) CHECK(row["avoiding"] == true);
}

TEST_CASE("round trip equals the in-memory pipeline across generators") {
    for (int id = 1; id <= 17; ++id) {
        ConstructionSpec spec = construction_spec(id);
        for (int n : {spec.min_n + 4, 24}) {
            std::string path = temp_path("rt.txt");
            RunCapture g = run_cli({"gen", "--id", std::to_string(id), "--n",
                                    std::to_string(n), "--seed", "4", "--out", path});
            REQUIRE(g.code == 0);
            std::ifstream f(path);
            EdgeColoring parsed = EdgeColoring::read(f);
            GeneratedColoring direct =
                spec.deterministic ? generate(id, n) : generate(id, n, 4);
            CHECK(parsed == direct.coloring);
            CHECK(h2_of_coloring(parsed).value == h2_of_coloring(direct.coloring).value);
            std::remove(path.c_str());
        }
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"unknown-command"}).code == 2);
    CHECK(run_cli({"exact", "--n", "4"}).code == 2);        // missing family
    CHECK(run_cli({"h2", "--coloring", "no_such_file"}).code == 2);
    CHECK(run_cli({"gen", "--id", "99", "--n", "10", "--out", "x"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("malformed coloring files name the offending position") {
    std::string path = temp_path("bad.txt");
    {
        std::ofstream f(path);
        f << "n=3\nrrq\n";
    }
    std::ostringstream out, err;
    int code = run({"check", "--coloring", path, "--family", "rrb"}, out, err);
    CHECK(code == 2);
    CHECK(err.str().find("offset 2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_SUITE_END();
