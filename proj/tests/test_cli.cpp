// End-to-end checks of the command line tool: spawns the binary handed in as
// argv[1], feeds it job files, and inspects outputs and exit codes.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flatk/engine.hpp"
#include "flatk/json_io.hpp"
#include "flatk/oracle.hpp"

using flatk::Cyclo;
using flatk::ordered_json;
using flatk::Rational;

namespace {

int failures = 0;
std::string cli;
std::string dir;

#define CHECK(cond)                                                          \
    do {                                                                     \
        if (!(cond)) {                                                       \
            ++failures;                                                      \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": "      \
                      << #cond << "\n";                                      \
        }                                                                    \
    } while (0)

#define REQUIRE(cond)                                                        \
    do {                                                                     \
        if (!(cond)) {                                                       \
            ++failures;                                                      \
            std::cerr << "FATAL " << __FILE__ << ":" << __LINE__ << ": "     \
                      << #cond << "\n";                                      \
            return;                                                          \
        }                                                                    \
    } while (0)

int run_cli(const std::string& args, const std::string& capture = "") {
    std::string cmd = cli + " " + args;
    if (!capture.empty())
        cmd += " > " + capture + " 2>/dev/null";
    else
        cmd += " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status))
        return -1;
    return WEXITSTATUS(status);
}

void put(const std::string& name, const std::string& content) {
    std::ofstream f(dir + "/" + name, std::ios::binary);
    f << content;
}

std::string slurp(const std::string& name) {
    std::ifstream f(dir + "/" + name, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string path(const std::string& name) { return dir + "/" + name; }

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ','))
        out.push_back(field);
    return out;
}

void test_index_basic() {
    put("basic.json", R"({"command":"index","type":"A1","genus":2,"level":1})");
    REQUIRE(run_cli("index " + path("basic.json") + " --out " + path("basic.out")) == 0);
    const ordered_json j = ordered_json::parse(slurp("basic.out"));
    CHECK(j["command"] == "index");
    const auto s = flatk::series_from_json(j["value"]);
    CHECK(s.order() == 0);
    CHECK(s[0].rationalize() == Rational(4));

    // --order overrides the spec's truncation order
    REQUIRE(run_cli("index " + path("basic.json") + " --order 3 --out " + path("basic3.out")) ==
            0);
    const ordered_json j3 = ordered_json::parse(slurp("basic3.out"));
    CHECK(flatk::series_from_json(j3["value"]).order() == 3);
}

void test_index_breakdown_and_float() {
    put("deep.json", R"({"type":"A1","genus":2,"level":2,"order":2,
                         "deformation":[[2]],"boundary":[[2]],"breakdown":true})");
    REQUIRE(run_cli("index " + path("deep.json") + " --backend both --out " + path("deep.out")) ==
            0);
    const ordered_json j = ordered_json::parse(slurp("deep.out"));
    const auto value = flatk::series_from_json(j["value"]);

    // the emitted series round-trips to exactly what the library computes
    const flatk::RootDatum& d = flatk::root_datum('A', 1);
    flatk::IndexJob job;
    job.datum = &d;
    job.genus = 2;
    job.level = 2;
    job.order = 2;
    job.deformation = flatk::cached_character(d, {2});
    job.boundary = {flatk::cached_character(d, {2})};
    const auto expect = flatk::index_pairing<Cyclo>(job);
    CHECK(value == expect.total);

    // per-orbit breakdown is present and sums to the total
    REQUIRE(j.contains("breakdown"));
    REQUIRE(j["breakdown"].size() == 3);
    flatk::TSeries<Cyclo> acc(2);
    for (const auto& entry : j["breakdown"])
        acc += flatk::series_from_json(entry["series"]);
    CHECK(acc == value);

    // float backend shadows the exact value
    REQUIRE(j.contains("float_value"));
    const auto& fc = j["float_value"]["coeffs"];
    REQUIRE(fc.size() == 3);
    for (int i = 0; i <= 2; ++i) {
        const auto e = value[i].to_complex();
        CHECK(std::abs(e.real() - fc[i][0].get<double>()) <= 1e-9 * (1.0 + std::abs(e.real())));
        CHECK(std::abs(e.imag() - fc[i][1].get<double>()) <= 1e-9);
    }
}

void test_index_insertions() {
    put("curve.json", R"({"type":"A1","genus":1,"level":1,"order":1,
                          "curve_insertion":{"u1":[1],"u2":[1],"intersection":1}})");
    REQUIRE(run_cli("index " + path("curve.json") + " --out " + path("curve.out")) == 0);
    const auto s =
        flatk::series_from_json(ordered_json::parse(slurp("curve.out"))["value"]);
    CHECK(s[0].rationalize() == Rational(1));
    CHECK(s[1].is_zero());

    put("point.json", R"({"type":"A1","genus":1,"level":1,
                          "point_insertion":[2]})");
    REQUIRE(run_cli("index " + path("point.json") + " --out " + path("point.out")) == 0);
    const auto sp =
        flatk::series_from_json(ordered_json::parse(slurp("point.out"))["value"]);
    CHECK(sp[0].rationalize() == Rational(0));
}

void test_index_errors() {
    put("nolvl.json", R"({"type":"A1","genus":0})");
    CHECK(run_cli("index " + path("nolvl.json"), path("err1.out")) == 2);
    {
        const ordered_json e = ordered_json::parse(slurp("err1.out"));
        CHECK(e["error"]["kind"] == "spec");
        bool found = false;
        for (const auto& v : e["error"]["violations"])
            found = found || v.get<std::string>() == "missing field: level";
        CHECK(found);
    }

    put("unknown.json", R"({"type":"A1","genus":0,"level":1,"bogus":3})");
    CHECK(run_cli("index " + path("unknown.json"), path("err2.out")) == 2);
    {
        const ordered_json e = ordered_json::parse(slurp("err2.out"));
        bool found = false;
        for (const auto& v : e["error"]["violations"])
            found = found || v.get<std::string>() == "unknown field: bogus";
        CHECK(found);
    }

    // all violations are reported in one pass
    put("multi.json", R"({"genus":-1})");
    CHECK(run_cli("index " + path("multi.json"), path("err3.out")) == 2);
    {
        const ordered_json e = ordered_json::parse(slurp("err3.out"));
        CHECK(e["error"]["violations"].size() == 3);
    }

    put("lowlvl.json", R"({"type":"A1","genus":0,"level":-2})");
    CHECK(run_cli("index " + path("lowlvl.json")) == 2);

    put("neg.json", R"({"type":"A1","genus":0,"level":1,"boundary":[[-1]]})");
    CHECK(run_cli("index " + path("neg.json")) == 2);

    put("broken.json", "this is not json {");
    CHECK(run_cli("index " + path("broken.json")) == 2);

    CHECK(run_cli("index " + path("does_not_exist.json")) == 2);

    // CLI misuse: unknown subcommand / missing argument
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("index") == 2);
}

void test_verify() {
    REQUIRE(run_cli("verify fusion --out " + path("fusion.out")) == 0);
    const ordered_json j = ordered_json::parse(slurp("fusion.out"));
    CHECK(j["suite"] == "fusion");
    CHECK(j["pass"] == true);
    REQUIRE(j["cases"].size() > 0);
    for (const auto& c : j["cases"])
        CHECK(c["equal"] == true);

    CHECK(run_cli("verify shift") == 0);
    CHECK(run_cli("verify nope", path("badsuite.out")) == 2);
    const ordered_json e = ordered_json::parse(slurp("badsuite.out"));
    CHECK(e["error"]["kind"] == "spec");
}

void test_pairing() {
    put("pair.json", R"({"command":"pairing","type":"A1","genus":2,
                         "marked":[["1/2"]],
                         "schedule":[2,4,6,8,10,12,14,16,18],
                         "order":1,"deformation":[[2]]})");
    REQUIRE(run_cli("pairing " + path("pair.json") + " --out " + path("pair.csv")) == 0);
    const std::string text = slurp("pair.csv");
    const auto split = text.find("\n\n");
    REQUIRE(split != std::string::npos);
    const auto lines = split_lines(text.substr(0, split));
    REQUIRE(lines.size() == 19); // header + 9 levels x 2 orders
    CHECK(lines[0] == "k,t_order,value_rational,value_float_re,value_float_im");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split_csv(lines[i]);
        REQUIRE(f.size() == 5);
        const long k = std::stol(f[0]);
        const long t_order = std::stol(f[1]);
        CHECK(k % 2 == 0);
        CHECK(t_order == static_cast<long>((i - 1) % 2));
        if (t_order == 0) {
            // constant term is the fusion count with one label k/2
            const Rational expect(flatk::fusion_verlinde(k, 2, {k / 2}));
            CHECK(f[2] == expect.str());
            CHECK(std::abs(std::stod(f[3]) - expect.to_double()) <= 1e-9);
            CHECK(std::stod(f[4]) == 0.0);
        }
    }

    // the default period is the denominator lcm (2), which is too coarse here:
    // inside the even class the one-point function alternates with k/2 parity,
    // so no polynomial validates and each order reports that instead of a fit
    const ordered_json quasi = ordered_json::parse(text.substr(split + 2));
    REQUIRE(quasi.size() == 2);
    for (const auto& entry : quasi) {
        REQUIRE(entry.contains("error"));
        CHECK(entry["error"].get<std::string>().find("validates") != std::string::npos);
    }
    CHECK(quasi[0]["t_order"] == 0);
    CHECK(quasi[1]["t_order"] == 1);

    // an explicit period 4 resolves the parity and the fits come out exact
    put("pair4.json", R"({"command":"pairing","type":"A1","genus":2,
                          "marked":[["1/2"]],
                          "schedule":[4,8,12,16,20,24,28,32,36],
                          "order":1,"deformation":[[2]],"period":4})");
    REQUIRE(run_cli("pairing " + path("pair4.json") + " --out " + path("pair4.csv")) == 0);
    const std::string text4 = slurp("pair4.csv");
    const auto split4 = text4.find("\n\n");
    REQUIRE(split4 != std::string::npos);
    const ordered_json quasi4 = ordered_json::parse(text4.substr(split4 + 2));
    REQUIRE(quasi4.size() == 2);
    for (const auto& entry : quasi4) {
        CHECK(!entry.contains("error"));
        CHECK(entry["period"] == 4);
        REQUIRE(entry["residues"].size() == 4);
        CHECK(entry["residues"][0].size() > 0);
        CHECK(entry["residues"][1].size() == 0);
        CHECK(entry["residues"][2].size() == 0);
        CHECK(entry["residues"][3].size() == 0);
    }
    // class 0 mod 4 carries all the data; both orders validate on held-out k
    CHECK(quasi4[0]["degree"] == 4);
    const ordered_json c0 = ordered_json::parse(
        R"([["1","1"],["3","2"],["7","8"],["1","4"],["1","32"]])");
    CHECK(quasi4[0]["residues"][0] == c0);
    CHECK(quasi4[1]["degree"] == 3);
    const ordered_json c1 =
        ordered_json::parse(R"([["-2","1"],["10","3"],["13","4"],["13","24"]])");
    CHECK(quasi4[1]["residues"][0] == c1);

    // derivative mode keeps only the t^1 rows
    put("deriv.json", R"({"command":"pairing","type":"A1","genus":2,
                          "marked":[["1/2"]],
                          "schedule":[4,8,12,16,20,24,28,32,36],
                          "order":1,"deformation":[[2]],"period":4,
                          "mode":"derivative"})");
    REQUIRE(run_cli("pairing " + path("deriv.json") + " --out " + path("deriv.csv")) == 0);
    const std::string dtext = slurp("deriv.csv");
    const auto dsplit = dtext.find("\n\n");
    REQUIRE(dsplit != std::string::npos);
    const auto dlines = split_lines(dtext.substr(0, dsplit));
    CHECK(dlines.size() == 10); // header + 9 levels
    for (std::size_t i = 1; i < dlines.size(); ++i)
        CHECK(split_csv(dlines[i])[1] == "1");
    const ordered_json dquasi = ordered_json::parse(dtext.substr(dsplit + 2));
    REQUIRE(dquasi.size() == 1);
    CHECK(dquasi[0]["t_order"] == 1);
    CHECK(!dquasi[0].contains("error"));
    CHECK(dquasi[0]["degree"] == 3);
}

void test_pairing_errors() {
    // odd level cannot scale omega/2 into the weight lattice
    put("odd.json", R"({"type":"A1","genus":2,"marked":[["1/2"]],
                        "schedule":[2,3],"order":1})");
    CHECK(run_cli("pairing " + path("odd.json"), path("perr1.out")) == 2);
    const ordered_json e = ordered_json::parse(slurp("perr1.out"));
    bool found = false;
    for (const auto& v : e["error"]["violations"])
        found = found || v.get<std::string>().find("does not scale marked[0]") !=
                             std::string::npos;
    CHECK(found);

    put("nosched.json", R"({"type":"A1","genus":2,"order":1})");
    CHECK(run_cli("pairing " + path("nosched.json")) == 2);

    put("lowk.json", R"({"type":"A1","genus":2,"schedule":[-2],"order":1})");
    CHECK(run_cli("pairing " + path("lowk.json")) == 2);

    // derivative mode refuses order 0
    put("deriv0.json", R"({"type":"A1","genus":2,"schedule":[2],
                           "mode":"derivative"})");
    CHECK(run_cli("pairing " + path("deriv0.json")) == 2);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-flatk-binary>\n";
        return 2;
    }
    cli = argv[1];
    char tmpl[] = "/tmp/flatk_cli_test_XXXXXX";
    char* d = mkdtemp(tmpl);
    if (!d) {
        std::cerr << "cannot create temp dir\n";
        return 2;
    }
    dir = d;

    test_index_basic();
    test_index_breakdown_and_float();
    test_index_insertions();
    test_index_errors();
    test_verify();
    test_pairing();
    test_pairing_errors();

    if (failures) {
        std::cerr << failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "all command line checks passed\n";
    return 0;
}
