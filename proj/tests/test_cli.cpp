#include "tilinglab/spec_json.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using tilinglab::json;

namespace {

struct Run {
    int code;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + quote(TILINGLAB_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("cli tgf") {
    Run r = cli("tgf --region " + quote(R"({"type":"hexagon","a":1,"b":1,"c":1})"));
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == "2");
    CHECK(j["tgf"] == json::parse(R"([[-1,0,0,"1"],[1,0,0,"1"]])"));

    Run both = cli("tgf --engine both --region " + quote(R"({"type":"S","x":2,"y":2,"Z":[-3,1]})"));
    CHECK(both.code == 0);

    Run pts = cli("tgf --mode points:3 --region " + quote(R"({"type":"hexagon","a":1,"b":1,"c":1})"));
    CHECK(pts.code == 0);
    CHECK(json::parse(pts.out)["points"].size() == 3);
}

TEST_CASE("cli exit codes") {
    CHECK(cli("tgf --region " + quote("{bad")).code == 2);
    CHECK(cli("tgf --region " + quote(R"({"type":"torus"})")).code == 2);
    CHECK(cli("verify --suite nothing").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("tgf --engine dfs --region " + quote(R"({"type":"hexagon","a":2,"b":2,"c":2})"),
              "TILINGLAB_CAPS=dfs=3")
              .code == 3);
    // the printed variant of the flipped family fails on this instance
    std::string inst = R"({"family":"D","x":0,"y":1,"z":1,"w":0,"arms":[1,1,0]})";
    json w{{"suite", "thm34-D"}, {"mode", "symbolic"}, {"instance", json::parse(inst)}};
    CHECK(cli("replay --witness " + quote(w.dump())).code == 0);
    w["instance"]["variant"] = "statement";
    Run bad = cli("replay --witness " + quote(w.dump()));
    CHECK(bad.code == 4);
    CHECK(json::parse(bad.out)[0]["status"] == "fail");
}

TEST_CASE("cli verify report replays") {
    Run r = cli("verify --suite thm31 --samples 3 --max 3 --seed 5");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["suite"] == "thm31");
    CHECK(rep["counts"]["pass"] == 3);
    CHECK(rep["counts"]["fail"] == 0);
    CHECK(cli("replay --witness " + quote(rep.dump())).code == 0);
    // same seed, same instances
    Run again = cli("verify --suite thm31 --samples 3 --max 3 --seed 5");
    CHECK(json::parse(again.out)["config"] == rep["config"]);
}

TEST_CASE("cli render and formula") {
    Run svg = cli("render --region " + quote(R"({"type":"hexagon","a":1,"b":2,"c":1})"));
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    Run js = cli("render --format json --region " + quote(R"({"type":"S","x":1,"y":1,"Z":[1]})"));
    CHECK(js.code == 0);
    Run round = cli("tgf --region " + quote(js.out));
    Run direct = cli("tgf --region " + quote(R"({"type":"S","x":1,"y":1,"Z":[1]})"));
    CHECK(round.code == 0);
    CHECK(round.out == direct.out);
    Run f = cli("formula macmahon --instance " + quote(R"({"a":2,"b":3,"c":4})"));
    CHECK(f.code == 0);
    CHECK(f.out.find("490") != std::string::npos);
    Run suites = cli("suites");
    CHECK(suites.out.find("engine-agreement") != std::string::npos);
}
