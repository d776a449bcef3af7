#include "trigroups/cli.hpp"
#include "trigroups/rational.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {
struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = tg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    auto r = run(std::move(args));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return json::parse(r.out);
}
} // namespace

TEST_CASE("expand")
{
    auto d = run_json({"expand", "--type", "2,3,inf", "--point", "cusp", "--order", "6", "--format", "json"});
    CHECK(d["schema"] == "1");
    CHECK(d["command"] == "expand");
    const auto& c = d["coefficients"];
    REQUIRE(c.size() == 8);
    CHECK(c[0]["n"] == -1);
    // c_1 = 196884/1728^2; exact numbers are written in lowest terms
    CHECK(c[2]["n"] == 1);
    CHECK(tg::parse_rational(c[2]["value"].get<std::string>()) == tg::parse_rational("5469/82944"));
    CHECK(c[2]["value"] == "1823/27648");

    auto e = run_json({"expand", "--type", "2,3,inf", "--point", "z1", "--order", "6"});
    CHECK(e["coefficients"][2]["value"] == "23/54");

    auto raw = run_json({"expand", "--type", "2,3,inf", "--order", "2", "--variable", "raw", "--digits", "20"});
    CHECK(raw["alpha3"].get<std::string>().rfind("1.7280000000000000000e+03", 0) == 0);
    CHECK(raw["coefficients"][2]["value"].get<std::string>().rfind("1.1393750000000000000e+02", 0) == 0); // 196884/1728
    CHECK(run({"expand", "--type", "2,3,inf", "--point", "z1", "--order", "2", "--variable", "raw"}).code == 1);
    CHECK(run({"expand", "--type", "2,inf,inf", "--point", "z2", "--order", "2"}).code == 1);
}

TEST_CASE("validation errors exit 1")
{
    auto r = run({"expand", "--type", "3,3,3", "--order", "4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("non-hyperbolic type") != std::string::npos);
    CHECK(run({"expand", "--type", "2,x,inf", "--order", "4"}).code == 1);
    CHECK(run({"expand", "--type", "2,3", "--order", "4"}).code == 1);
    CHECK(run({"expand", "--type", "2,3,inf", "--order", "1001"}).code == 1);
    CHECK(run({"--order-cap", "5", "expand", "--type", "2,3,inf", "--order", "6"}).code == 1);
    CHECK(run({"expand", "--type", "2,3,inf", "--order", "4", "--bogus"}).code == 1);
    CHECK(run({"expand", "--type", "2,3,inf", "--order", "4", "--format", "xml"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"cy", "--model", "nope", "--order", "3"}).code == 1);
    CHECK(run({"basis", "--type", "2,3,inf", "--weight", "5", "--order", "3"}).code == 1);
    CHECK(run({"halphen", "--type", "2,3,7", "--order", "3"}).code == 1);
    CHECK(run({"verify", "--suite", "classical", "--type", "2,5,inf", "--order", "5"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify suites")
{
    auto v = run({"verify", "--suite", "identities", "--type", "2,5,inf", "--order", "30"});
    CHECK(v.code == 0);
    for (const char* suite : {"ode", "cross-engine"}) {
        auto r = run({"verify", "--suite", suite, "--type", "3,7,inf", "--order", "20"});
        CHECK_MESSAGE(r.code == 0, suite << ": " << r.out << r.err);
    }
    CHECK(run({"verify", "--suite", "ode", "--type", "2,3,7", "--order", "10"}).code == 0);
    CHECK(run({"verify", "--suite", "classical", "--type", "2,4,inf", "--order", "20"}).code == 0);
    auto p = run_json({"verify", "--suite", "proposition1", "--type", "2,3,inf", "--order", "20"});
    CHECK(p["ok"] == true);
}

TEST_CASE("other commands")
{
    auto h = run_json({"halphen", "--type", "2,3,inf", "--order", "3"});
    CHECK(h["alpha3_over_nu"] == "72");
    CHECK(h["coefficients"].size() == 4);
    auto s = run_json({"halphen", "--type", "2,3,inf", "--order", "1", "--symbolic"});
    CHECK(s["coefficients"][0]["t1"] == "1");
    CHECK(s["coefficients"][0]["t3"] == "1");

    auto b = run_json({"basis", "--type", "2,3,inf", "--weight", "12", "--order", "3"});
    CHECK(b["dimension"] == 2);

    auto c = run_json({"constants", "--type", "2,3,inf", "--digits", "12"});
    bool found = false;
    for (const auto& row : c["constants"]) {
        if (row["name"] == "alpha3") {
            found = true;
            CHECK(row["value"] == "1.72800000000e+03");
            CHECK(row["value"].get<std::string>().size() == 17);
        }
    }
    CHECK(found);

    auto sc = run_json({"scan", "--type", "2,5,inf", "--order", "20", "--series", "J", "--prime-bound", "30"});
    CHECK(sc["series"] == "J");
    CHECK(sc["denominators"].size() == 22);
    CHECK(sc["complete"] == true);

    auto cy = run_json({"cy", "--model", "quintic", "--order", "3"});
    CHECK(cy["instantons"][1]["n_d"] == "2875");
    CHECK(cy["mInfOrder"] == "5");
    CHECK(cy["mirror"][1] == "-770");
    CHECK(cy["monodromy"]["M0"][1][0] == "-1");
    auto inf = run_json({"cy", "--model", "14", "--order", "2"});
    CHECK(inf["mInfOrder"] == "inf");

    auto t = run_json({"table1"});
    CHECK(t["rows"].size() == 9);
}

TEST_CASE("formats are deterministic")
{
    std::vector<std::string> a{"scan", "--type", "2,7,inf", "--order", "12", "--series", "t1", "--format", "csv"};
    auto x = run(a), y = run(a);
    CHECK(x.code == 0);
    CHECK(x.out == y.out);
    CHECK(x.out.rfind("n,denominator,factorization\n", 0) == 0);
    auto t = run({"table1", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("schema: 1") != std::string::npos);
    // a cell with a comma is quoted
    auto c = run({"table1", "--format", "csv"});
    CHECK(c.out.find("\"2,3,inf\"") != std::string::npos);
}
