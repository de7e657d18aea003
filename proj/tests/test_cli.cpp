#include "oracles.hpp"

#include "knotshake/cli.hpp"
#include "knotshake/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace knotshake;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
    json body() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

std::string random_expr(oracle::Gen& g, int depth)
{
    const long pick = depth > 2 ? g.uniform(0, 2) : g.uniform(0, 6);
    switch (pick) {
    case 0: return "U";
    case 1: {
        const long p = g.uniform(2, 5);
        long q = g.uniform(2, 9);
        while (std::gcd(p, q) != 1)
            ++q;
        return "T(" + std::to_string(g.coin() ? p : -p) + "," + std::to_string(q) + ")";
    }
    case 2: return "twist(" + std::to_string(g.uniform(-4, 4)) + ")";
    case 3: return "mirror(" + random_expr(g, depth + 1) + ")";
    case 4: {
        std::string s = "sum(" + random_expr(g, depth + 1);
        for (long i = g.uniform(0, 2); i > 0; --i)
            s += "," + random_expr(g, depth + 1);
        return s + ")";
    }
    case 5: {
        const long m = g.uniform(1, 4);
        long r = g.uniform(-5, 5);
        while (std::gcd(m, r) != 1)
            ++r;
        return "cable(" + std::to_string(m) + "," + std::to_string(r) + ";" + random_expr(g, depth + 1) + ")";
    }
    default: return "seifert([[-1,1],[0," + std::to_string(g.uniform(-3, 3)) + "]])";
    }
}

// Inserts spaces at random token boundaries.
std::string spaced(oracle::Gen& g, const std::string& s)
{
    std::string out;
    for (char c : s) {
        if ((c == '(' || c == ',' || c == ';' || c == ')') && g.coin())
            out += ' ';
        out += c;
        if ((c == '(' || c == ',' || c == ';') && g.coin())
            out += "  ";
    }
    return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
    const auto p = std::filesystem::temp_directory_path() / ("knotshake_test_" + name);
    std::ofstream(p) << content;
    return p;
}

} // namespace

TEST_CASE("parser examples")
{
    CHECK(to_string(*parse_knot_expr("T(2,3)")) == "T(2,3)");
    CHECK(to_string(*parse_knot_expr(" sum( twist(1) , mirror(twist(1)) ) ")) == "sum(twist(1),mirror(twist(1)))");
    const KnotExprPtr b = parse_knot_expr("cable(3,76;T(5,6))");
    CHECK(to_string(*b) == "cable(3,76;T(5,6))");
    CHECK(to_string(*parse_knot_expr("seifert([[-1, 1], [0, -1]])")) == "seifert([[-1,1],[0,-1]])");

    CHECK_THROWS_WITH_AS(parse_knot_expr("T(2,4)"), "torus parameters not coprime: this is a link", DomainError);
    CHECK_THROWS_AS(parse_knot_expr("cable(2,4;U)"), DomainError);
}

TEST_CASE("parser syntax errors carry byte offsets")
{
    auto offset = [](const std::string& text) -> long {
        try {
            parse_knot_expr(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset("T(2,3") == 5);
    CHECK(offset("T(2 3)") == 4);
    CHECK(offset("knot(1)") == 0);
    CHECK(offset("sum(U,)") == 6);
    CHECK(offset("U U") == 2);
    CHECK(offset("") == 0);
    CHECK(offset("twist(x)") == 6);
    CHECK(offset("cable(2,1,U)") == 9);
    CHECK(offset("seifert([[1,2],[3,4)") == 8);
}

TEST_CASE("seifert files")
{
    const auto p = temp_file("v.json", R"({"matrix": [[-1, 1], [0, -2]]})");
    const KnotExprPtr k = parse_knot_expr("seifert(" + p.string() + ")");
    CHECK(to_string(*k) == "seifert([[-1,1],[0,-2]])");
    CHECK_THROWS_AS(parse_knot_expr("seifert(/nonexistent/file.json)"), DomainError);
    const auto bad = temp_file("link.json", R"({"matrix": [[0, 1], [1, 0]]})");
    CHECK_THROWS_AS(parse_knot_expr("seifert(" + bad.string() + ")"), DomainError);
}

TEST_CASE("print and parse round trip")
{
    oracle::Gen g(51);
    for (int trial = 0; trial < 300; ++trial) {
        const std::string text = random_expr(g, 0);
        CAPTURE(text);
        KnotExprPtr k;
        try {
            k = parse_knot_expr(spaced(g, text));
        } catch (const ParseError&) {
            FAIL("generated expression failed to parse");
        } catch (const DomainError&) {
            continue; // e.g. a literal that is not a knot
        }
        const std::string canon = to_string(*k);
        CHECK(to_string(*parse_knot_expr(canon)) == canon);
    }
}

TEST_CASE("JSON round trips")
{
    oracle::Gen g(52);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly p = g.laurent(6, 1000);
        CHECK(laurent_from_json(json::parse(to_json(p).dump())) == p);
    }
    const BigInt big("123456789012345678901234567890");
    CHECK(to_json(big).is_string());
    CHECK(big_from_json(to_json(big)) == big);
    CHECK(to_json(BigInt(-42)).is_number_integer());
    CHECK(to_json(make_rational(6, -4)) == "-3/2");
    CHECK(rational_from_json("-3/2") == make_rational(-3, 2));
    CHECK(rational_from_json(json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json("1/0"), DomainError);
    CHECK_THROWS_AS(laurent_from_json(json::object()), DomainError);
}

TEST_CASE("shake subcommand")
{
    const Run r = run({"shake", "sum(twist(1),twist(1))", "--n", "2"});
    CHECK(r.status == exit_code::ok);
    const json j = r.body();
    CHECK(j["verdict"] == false);
    CHECK(j["conditions"]["i"]["order"] == 25);
    CHECK(j["conditions"]["ii"]["pass"] == true);
    CHECK(j["conditions"]["iii"]["pass"] == true);
    CHECK(j["n"] == 2);

    const Run u = run({"shake", "U", "--n", "7"});
    CHECK(u.status == exit_code::ok);
    CHECK(u.body()["verdict"] == true);

    CHECK(run({"shake", "T(2,3)", "--n", "3", "--fail-on-obstructed"}).status == exit_code::obstructed);
    CHECK(run({"shake", "U", "--n", "3", "--fail-on-obstructed"}).status == exit_code::ok);
    CHECK(run({"shake", "T(2,3)", "--n", "3"}).status == exit_code::ok);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).status == exit_code::usage);
    CHECK(run({"frobnicate"}).status == exit_code::usage);
    CHECK(run({"shake", "U"}).status == exit_code::usage);
    CHECK(run({"shake", "U", "--n", "two"}).status == exit_code::usage);

    const Run syntax = run({"parse", "T(2,3"});
    CHECK(syntax.status == exit_code::usage);
    CHECK(syntax.body()["offset"] == 5);

    const Run link = run({"parse", "T(2,4)"});
    CHECK(link.status == exit_code::computation);
    CHECK(link.body()["error"] == "torus parameters not coprime: this is a link");

    CHECK(run({"casson-gordon", "U", "--n", "3", "--k", "5"}).status == exit_code::computation);
    CHECK(run({"witness", "T(2,3)", "--g", "1", "--h", "0"}).status == exit_code::computation);
    CHECK(run({"--help"}).status == exit_code::ok);
}

TEST_CASE("other subcommands")
{
    const json inv = run({"invariants", "T(2,3)", "--n", "6"}).body();
    CHECK(inv["delta"]["lo"] == -1);
    CHECK(inv["delta"]["coeffs"] == json::array({1, -1, 1}));
    CHECK(inv["arf"] == 1);
    CHECK(inv["branched_order"]["infinite"] == true);
    CHECK(inv["signatures"].size() == 4);
    CHECK(inv["signatures"][1]["sigma"] == -1);

    CHECK(run({"invariants", "U"}).body()["n"] == 2);

    const json cg = run({"casson-gordon", "T(2,3)", "--n", "2", "--k", "1"}).body();
    CHECK(cg["value"] == "2");

    const json w = run({"witness", "twist(-2)", "--g", "1", "--h", "0"}).body();
    CHECK(w["verified"] == true);
    CHECK(w["determinant"]["lo"] == 1);

    const json sm = run({"shaking-matrix", "T(2,3)", "--k", "1", "--n", "1"}).body();
    CHECK(sm["matrix"].size() == 4);

    const json jump = run({"jump", "T(2,3)", "--resolution", "1/100"}).body();
    REQUIRE(jump["interval"].is_array());
    CHECK(rational_from_json(jump["interval"][0]) <= make_rational(1, 6));
    CHECK(run({"jump", "U", "--resolution", "1/10"}).body()["interval"].is_null());

    const json sig = run({"signature", "T(2,3)", "--k", "1", "--n", "6", "--averaged", "--inertia"}).body();
    CHECK(sig["sigma"] == -1);
    CHECK(sig["averaged"] == "-1");
    CHECK(sig["inertia"]["null"] == 1);

    const json bounds = run({"bounds", "twist(-2)", "--g", "1"}).body();
    CHECK(bounds["lower"] == 3);
    CHECK(bounds["upper"] == 3);

    const auto form = temp_file("form.json", R"({"n": 4, "matrix": [[{"lo": 1, "coeffs": [1, 0, 1]}]]})");
    const json ms = run({"multisig", "--form", form.string()}).body();
    CHECK(ms["alpha"] == json::array({1, 0, -1, 0}));
    CHECK(ms["l4s"] == json::array({0, -1, 1}));
    const auto tl = temp_file("tl.json", R"({"n": 2, "seifert": [[-1, 1], [0, -1]]})");
    CHECK(run({"multisig", "--form", tl.string()}).body()["alpha"] == json::array({0, -2}));
}

TEST_CASE("batch output is order preserving and width independent")
{
    std::string lines;
    const char* exprs[] = {"T(2,3)", "twist(1)", "sum(twist(1),twist(1))", "cable(2,1;T(2,9))", "T(2,4)", "U"};
    for (const char* e : exprs)
        for (int n = 2; n <= 5; ++n)
            lines += json{{"expr", e}, {"command", "shake"}, {"params", {{"n", n}}}}.dump() + "\n";
    lines += "not json\n\n";
    lines += R"({"command": "batch", "expr": "x"})" "\n";
    const auto file = temp_file("batch.jsonl", lines);

    const Run serial = run({"batch", file.string()});
    CHECK(serial.status == exit_code::ok);
    for (unsigned w : {2u, 3u, 8u, 64u})
        CHECK(run({"batch", file.string(), "--parallel", std::to_string(w)}).out == serial.out);

    std::istringstream in(serial.out);
    std::vector<json> out;
    for (std::string line; std::getline(in, line);)
        out.push_back(json::parse(line));
    REQUIRE(out.size() == 26);
    CHECK(out[0]["result"]["n"] == 2);
    CHECK(out[3]["result"]["n"] == 5);
    CHECK(out[8]["result"]["conditions"]["i"]["order"] == 25);
    CHECK(out[16]["status"] == exit_code::computation);
    CHECK(out[24]["status"] == exit_code::usage);
    CHECK(out[25]["status"] == exit_code::usage);
}
