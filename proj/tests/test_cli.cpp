#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "tinkit/io.hpp"

using namespace tinkit;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    Json report() const { return Json::parse(out); }
};

Run run(const std::string& args) {
    std::string cmd = std::string(TINKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / ("tinkit_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("gen then oracle") {
    fs::path dir = scratch();
    std::string g3 = (dir / "g3.gr").string();
    Run gen = run("gen --family Gn --n 3 -o " + g3);
    REQUIRE(gen.code == 0);
    CHECK(gen.report()["outputs"]["n"] == 9);

    Run tw = run("oracle tw " + g3);
    REQUIRE(tw.code == 0);
    CHECK(tw.report()["outputs"]["value"] == 2);
    CHECK(run("oracle tw --reference " + g3).report()["outputs"]["value"] == 2);
    // brute force over all orderings of G_3 gives tin 3
    CHECK(run("--deterministic oracle tin " + g3).report()["outputs"]["value"] == 3);
    fs::remove_all(dir);
}

TEST_CASE("decompose and validate") {
    fs::path dir = scratch();
    std::string c6 = (dir / "c6.gr").string(), td = (dir / "c6.td").string();
    REQUIRE(run("gen --family cycle --n 6 -o " + c6).code == 0);
    Run dec = run("decompose --graph " + c6 + " --strategy star-path --d 3 --s 5 -o " + td);
    if (dec.code == 0) {
        Json rep = dec.report();
        for (const auto& b : rep["bounds"]) CHECK(b["achieved"].get<long long>() <= 6);
        Run val = run("validate --graph " + c6 + " --td " + td);
        CHECK(val.code == 0);
        CHECK(val.report()["outputs"]["valid"] == true);
    } else {
        CHECK(dec.code == 1);
    }

    // strict mode finds the induced P_5
    Run strict = run("decompose --graph " + c6 + " --strategy star-path --d 3 --s 5 --strict");
    CHECK(strict.code == 1);
    CHECK(strict.report()["outputs"]["certificate"]["kind"] == "path");

    // a decomposition missing an edge
    std::string bad = (dir / "bad.td").string();
    write_file(bad, "s td 2 3 6\nb 1 1 2 3 4\nb 2 4 5 6\n1 2\n");
    Run val = run("validate --graph " + c6 + " --td " + bad);
    CHECK(val.code == 2);
    CHECK(val.report()["outputs"]["axiom"] == "edge-coverage");
    fs::remove_all(dir);
}

TEST_CASE("detect and exit codes") {
    fs::path dir = scratch();
    std::string star = (dir / "star.gr").string(), path = (dir / "p4.gr").string();
    REQUIRE(run("gen --family star --d 3 -o " + star).code == 0);
    REQUIRE(run("gen --family path --n 4 -o " + path).code == 0);
    CHECK(run("detect --graph " + star + " --pattern star --d 3").code == 1);
    CHECK(run("detect --graph " + path + " --pattern star --d 3").code == 0);
    CHECK(run("cograph --graph " + path).code == 1);

    std::string broken = (dir / "broken.gr").string();
    write_file(broken, "p tw 2 1\n1 5\n");
    CHECK(run("oracle tw " + broken).code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    fs::remove_all(dir);
}

TEST_CASE("mwis with a hint") {
    fs::path dir = scratch();
    std::string c = (dir / "c8.gr").string(), w = (dir / "w.json").string();
    REQUIRE(run("gen --family cycle --n 8 -o " + c).code == 0);
    write_file(w, "[1, 1, 1, 1, 1, 1, 1, \"5/2\"]");
    Run r = run("mwis --graph " + c + " --weights " + w);
    REQUIRE(r.code == 0);
    // 5/2 on vertex 7 plus three of 1..5 beats four unit weights
    CHECK(r.report()["outputs"]["weight"]["num"] == "11");
    CHECK(r.report()["outputs"]["weight"]["den"] == "2");
    CHECK(run("mwis --graph " + c + " --weights " + w + " --hint star-path:3").code == 2);
    fs::remove_all(dir);
}
