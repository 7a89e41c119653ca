#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confhodge/output.hpp"

using namespace confhodge;
using nlohmann::ordered_json;

TEST_CASE("integers cross the 64-bit boundary as strings") {
    CHECK(io::int_to_json(Int(42)) == ordered_json(42));
    CHECK(io::int_to_json(Int(-7)) == ordered_json(-7));
    Int big = 1;
    big <<= 80;
    auto j = io::int_to_json(big);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == big.get_str());
}

TEST_CASE("series json schema and round trip") {
    auto s = expand_rational(genfun::mixed_hodge_gf(0, 1), 2);
    std::string out = io::format_series(s, 0, 1, io::Format::json);
    CHECK(out ==
          "{\"genus\":0,\"punctures\":1,\"tmax\":2,\"terms\":[{\"x\":0,\"y\":0,"
          "\"u\":0,\"t\":0,\"c\":1},{\"x\":0,\"y\":0,\"u\":0,\"t\":1,\"c\":1},"
          "{\"x\":0,\"y\":0,\"u\":0,\"t\":2,\"c\":1},{\"x\":1,\"y\":1,\"u\":1,"
          "\"t\":2,\"c\":-1}]}\n");
    auto parsed = ordered_json::parse(out);
    CHECK(parsed.dump() + "\n" == out);
}

TEST_CASE("series csv and text") {
    auto s = expand_rational(genfun::mixed_hodge_gf(0, 1), 2);
    CHECK(io::format_series(s, 0, 1, io::Format::csv) ==
          "x,y,u,t,c\n0,0,0,0,1\n0,0,0,1,1\n0,0,0,2,1\n1,1,1,2,-1\n");
    CHECK(io::format_series(s, 0, 1, io::Format::text) ==
          "1 + t + t^2 - x*y*u*t^2\n");
}

TEST_CASE("strand series render in x,y,z") {
    auto s = expand_rational(genfun::strand_gf(genfun::Strand::diagonal, 1, 1), 2);
    std::string out = io::format_series(s, 1, 1, io::Format::json, true);
    auto parsed = ordered_json::parse(out);
    CHECK(parsed["zmax"] == 2);
    REQUIRE(!parsed["terms"].empty());
    CHECK(parsed["terms"][0].contains("z"));
    CHECK(!parsed["terms"][0].contains("u"));
    CHECK(parsed.dump() + "\n" == out);
}

TEST_CASE("table json, csv and signed mode") {
    auto table = genfun::hodge_table(0, 1, 2);
    std::string out = io::format_table(table, 2, io::Format::json);
    auto parsed = ordered_json::parse(out);
    CHECK(parsed["genus"] == 0);
    CHECK(parsed["punctures"] == 1);
    CHECK(parsed["tmax"] == 2);
    REQUIRE(parsed["entries"].size() == 4);
    CHECK(parsed["entries"][3] ==
          ordered_json({{"n", 2}, {"i", 1}, {"w1", 1}, {"w2", 1}, {"h", 1}}));
    CHECK(parsed.dump() + "\n" == out);

    CHECK(io::format_table(table, 2, io::Format::csv) ==
          "n,i,w1,w2,h\n0,0,0,0,1\n1,0,0,0,1\n2,0,0,0,1\n2,1,1,1,1\n");
    CHECK(io::format_table(table, 2, io::Format::csv, true) ==
          "n,i,w1,w2,c\n0,0,0,0,1\n1,0,0,0,1\n2,0,0,0,1\n2,1,1,1,-1\n");
}

TEST_CASE("dimension table serialization") {
    auto table = dg::cohomology_hilbert(0, 5);
    std::string out = io::format_dim_table(table, 0, 5, io::Format::json);
    auto parsed = ordered_json::parse(out);
    REQUIRE(parsed["entries"].size() == 2);
    CHECK(parsed["entries"][0] ==
          ordered_json({{"p", 0}, {"q", 0}, {"w1", 0}, {"w2", 0}, {"dim", 1}}));
    CHECK(parsed["entries"][1] ==
          ordered_json({{"p", 0}, {"q", 1}, {"w1", 1}, {"w2", 1}, {"dim", 1}}));
    CHECK(io::format_dim_table(table, 0, 5, io::Format::csv) ==
          "p,q,w1,w2,dim\n0,0,0,0,1\n0,1,1,1,1\n");
}

TEST_CASE("report serialization with and without witness") {
    verify::CheckReport ok;
    ok.suite = "identity";
    ok.params = "g_max=3";
    auto j = io::report_to_json(ok);
    CHECK(j["pass"] == true);
    CHECK(j["witness"].is_null());

    verify::CheckReport bad;
    bad.suite = "oracle";
    bad.params = "g_max=1 n_max=2";
    bad.pass = false;
    bad.witness = verify::CheckWitness{"g=1 n=2 w1=0 w2=0 i=0", "1", "2"};
    auto jb = io::report_to_json(bad);
    CHECK(jb["pass"] == false);
    CHECK(jb["witness"]["expected"] == "1");
    CHECK(jb["witness"]["actual"] == "2");
    CHECK(jb["witness"]["location"] == "g=1 n=2 w1=0 w2=0 i=0");

    std::string arr = io::format_reports({ok, bad});
    auto parsed = ordered_json::parse(arr);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["suite"] == "identity");
}

TEST_CASE("formatting is deterministic") {
    auto s = expand_rational(genfun::mixed_hodge_gf(2, 2), 5);
    CHECK(io::format_series(s, 2, 2, io::Format::json) ==
          io::format_series(s, 2, 2, io::Format::json));
    CHECK(io::parse_format("csv") == io::Format::csv);
    CHECK_THROWS_AS(io::parse_format("yaml"), std::invalid_argument);
}
