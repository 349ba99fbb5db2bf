#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

#include "flagpoly/building_set.hpp"
#include "flagpoly/json_io.hpp"

using namespace flagpoly;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const std::string stem =
        "flagpoly_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::string out_path = (dir / (stem + ".out")).string();
    const std::string err_path = (dir / (stem + ".err")).string();
    const std::string cmd =
        std::string(FLAGPOLY_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    int raw = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

struct TempDir {
    std::filesystem::path path;
    TempDir(const std::string& stem) {
        path = std::filesystem::temp_directory_path() /
               (stem + "_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("model emits graph JSON") {
    CliResult r = run_cli("model A 2");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("facets").size() == 5);

    CHECK(run_cli("model A2").out == r.out); // compact spec, same bytes

    CliResult d = run_cli("model D 2");
    REQUIRE(d.code == 0);
    CHECK(Json::parse(d.out).at("facets").size() == 4);

    CliResult c = run_cli("model cube3");
    REQUIRE(c.code == 0);
    CHECK(Json::parse(c.out).at("facets").size() == 6);

    CliResult p = run_cli("model prism:A2");
    REQUIRE(p.code == 0);
    CHECK(Json::parse(p.out).at("facets").size() == 7);
}

TEST_CASE("model nestohedron reads a building-set file") {
    TempDir tmp("fp_model_nesto");
    const std::string bs = (tmp.path / "path3.json").string();
    write_json_file(bs, building_set_to_json(path_building_set(3)));
    CliResult r = run_cli("model nestohedron " + bs);
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("facets").size() == 5);
}

TEST_CASE("model rejects unknown specs") {
    CHECK(run_cli("model X9").code == 2);
    CHECK(run_cli("model A").code == 2); // bare family letter is no spec
}

TEST_CASE("vectors in CSV and JSON") {
    CliResult csv = run_cli("vectors --model A3");
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "name,c0,c1,c2,c3\nf,14,21,9,1\nh,1,6,6,1\ngamma,1,3\n");

    CliResult js = run_cli("vectors --model D2 --format json");
    REQUIRE(js.code == 0);
    Json j = Json::parse(js.out);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("f") == Json::array({4, 4, 1}));
    CHECK(j.at("h") == Json::array({1, 2, 1}));
    CHECK(j.at("gamma") == Json::array({1}));
    CHECK(j.contains("model_digest"));
    CHECK(j.contains("tool_version"));

    CHECK(run_cli("vectors").code == 2);
    CHECK(run_cli("vectors --model A2 --graph x.json").code == 2);
    CHECK(run_cli("vectors --model A2 --format yaml").code == 2);
}

TEST_CASE("shave subcommand") {
    CliResult ok = run_cli("shave --model A2 --edge 0 1");
    REQUIRE(ok.code == 0);
    CHECK(Json::parse(ok.out).at("facets").size() == 6);

    CHECK(run_cli("shave --model A2 --edge 0 2").code == 2); // crossing diagonals
    CHECK(run_cli("shave --model A2 --edge 0 0").code == 2);
}

TEST_CASE("structural violations exit with code 3") {
    TempDir tmp("fp_cli_bad");
    const std::string bad = (tmp.path / "bad.json").string();
    Json j{{"dimension", 3},
           {"facets", Json::array()},
           {"edges", Json::array({Json::array({0, 1}), Json::array({1, 2}),
                                  Json::array({2, 3}), Json::array({0, 3})})}};
    for (int i = 0; i < 4; ++i)
        j["facets"].push_back(Json{{"kind", "derived"}, {"tag", "f" + std::to_string(i)}});
    std::ofstream(bad) << j.dump();
    CHECK(run_cli("vectors --graph " + bad).code == 3);
}

TEST_CASE("verify gal produces a passing report") {
    CliResult r = run_cli("verify gal --family A --max-rank 3");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("claim") == "gal");
    CHECK(j.at("overall") == "pass");
    CHECK(j.at("instances").size() == 2);
    for (const auto& inst : j.at("instances")) CHECK(inst.at("verdict") == "pass");
    CHECK(j.contains("tool_version"));
}

TEST_CASE("verify reports failures with exit code 5") {
    // rank 2 type D is a square, which decomposes; the certificate cannot fire
    CliResult r = run_cli("verify prop2 --family D --min-rank 2 --max-rank 2");
    CHECK(r.code == 5);
    Json j = Json::parse(r.out);
    CHECK(j.at("overall") == "fail");
}

TEST_CASE("verify rejects unknown claims") {
    CHECK(run_cli("verify perpetual-motion").code == 2);
}

TEST_CASE("verify thm2 at rank 3") {
    CliResult r = run_cli("verify thm2 --rank 3 --budget-seconds 120");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("overall") == "pass");
    const Json& details = j.at("instances").at(0).at("details");
    CHECK(details.at("steps") == 3);
    CHECK(details.at("certificate").at("steps").size() == 3);
}

TEST_CASE("find-sequence emits a replayable certificate") {
    CliResult r = run_cli("find-sequence --source cube3 --target A3 --budget-seconds 120");
    REQUIRE(r.code == 0);
    Json cert = Json::parse(r.out);
    CHECK(cert.at("steps").size() == 3);
    CHECK(cert.at("gamma_trace").size() == 4);

    CertificateData data = certificate_from_json(cert);
    auto steps = resolve_steps(data.source, data.step_labels);
    CHECK(steps.size() == 3);
}

TEST_CASE("find-sequence error paths") {
    CHECK(run_cli("find-sequence --source A2 --target cube3").code == 2); // dimensions differ
    CHECK(run_cli("find-sequence --source prism:D3 --target D4 --budget-seconds 0.0000001").code ==
          4);
    CHECK(run_cli("find-sequence --source A2 --target A2 --strategy bogus").code == 2);
}

TEST_CASE("outputs are byte-identical with and without cache") {
    TempDir cache("fp_cli_cache");
    const std::string with_cache = "--cache " + cache.path.string() + " ";

    std::string plain = run_cli("--no-cache vectors --model A4 --format json").out;
    std::string cold = run_cli(with_cache + "vectors --model A4 --format json").out;
    std::string warm = run_cli(with_cache + "vectors --model A4 --format json").out;
    CHECK(plain == cold);
    CHECK(cold == warm);
    CHECK(!plain.empty());

    std::string seq_plain = run_cli("--no-cache find-sequence --source cube3 --target A3").out;
    std::string seq_cold = run_cli(with_cache + "find-sequence --source cube3 --target A3").out;
    std::string seq_warm = run_cli(with_cache + "find-sequence --source cube3 --target A3").out;
    CHECK(seq_plain == seq_cold);
    CHECK(seq_cold == seq_warm);
    CHECK(!seq_plain.empty());

    std::string v_plain = run_cli("--no-cache verify gal --family D --max-rank 3").out;
    std::string v_warm = run_cli(with_cache + "verify gal --family D --max-rank 3").out;
    CHECK(v_plain == v_warm);
}

TEST_CASE("out flag writes the same bytes to a file") {
    TempDir tmp("fp_cli_out");
    const std::string path = (tmp.path / "a3.json").string();
    std::string direct = run_cli("model A 3").out;
    CliResult r = run_cli("model A 3 --out " + path);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == direct);
}

TEST_CASE("version flag") {
    CliResult r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
}
