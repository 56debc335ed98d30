#include <sstream>

#include "doctest.h"
#include "jamesgeo/error.hpp"
#include "jamesgeo/io.hpp"

using namespace jamesgeo;

TEST_CASE("numbers use 12 significant digits") {
    CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(io::format_number(INFINITY) == "inf");
    CHECK(io::number(2.0).dump() == "2.0");
    CHECK(io::number(-INFINITY) == "-inf");
}

TEST_CASE("list parsing") {
    CHECK(io::parse_int_list("1, 3,4") == std::vector<int>{1, 3, 4});
    CHECK(io::parse_int_list("").empty());
    CHECK_THROWS_AS(io::parse_int_list("1,x"), InvalidInput);
    CHECK_THROWS_AS(io::parse_int_list("1,,2"), InvalidInput);
    CHECK(io::parse_double_list("0.5,-1e-3") == std::vector<double>{0.5, -1e-3});
    CHECK_THROWS_AS(io::parse_double_list("1.5abc"), InvalidInput);
    CHECK(io::parse_tuple("2,5") == InterlacedTuple({2, 5}));
    CHECK_THROWS_AS(io::parse_tuple("5,2"), InvalidInput);
}

TEST_CASE("tree vector round trip") {
    TreeVec x;
    x.set(Node(), 1.0);
    x.set(Node("01"), -0.5);
    const auto j = io::to_json(x);
    CHECK(j.dump() == R"({"":1.0,"01":-0.5})");
    const auto back = io::tree_vec_from_json(j);
    CHECK(back(Node()) == 1.0);
    CHECK(back(Node("01")) == -0.5);
    CHECK_THROWS_AS(io::tree_vec_from_json(io::json::array()), InvalidInput);
    CHECK_THROWS_AS(io::tree_vec_from_json(io::json{{"2", 1.0}}), InvalidInput);
    CHECK_THROWS_AS(io::tree_vec_from_json(io::json{{"0", "a"}}), InvalidInput);
}

TEST_CASE("sequence round trip") {
    const FinSeq x({1.0, 0.0, 2.0}, 0.25);
    const auto back = io::fin_seq_from_json(io::to_json(x));
    CHECK(back == x);
    CHECK(io::fin_seq_from_json(io::json::parse("[1, 2]")) == FinSeq{1, 2});
    CHECK_THROWS_AS(io::fin_seq_from_json(io::json::parse(R"({"coeffs": [1, "a"]})")), InvalidInput);
}

TEST_CASE("segments and tuples") {
    CHECK(io::to_json(Segment(Node(), Node("0"))).dump() == R"(["","0"])");
    CHECK(io::to_json(InterlacedTuple({1, 3})).dump() == "[1,3]");
}

TEST_CASE("error objects") {
    const auto e = io::error_object("resource", "too big");
    CHECK(e["error"]["kind"] == "resource");
    CHECK(e["error"]["message"] == "too big");
}

TEST_CASE("csv tables carry the config line") {
    io::CsvTable table({"a", "b"});
    table.add_row({"1", "x,y"});
    std::ostringstream out;
    table.write(out, io::json{{"k", 2}});
    CHECK(out.str() == "# config: {\"k\":2}\na,b\n1,\"x,y\"\n");
}
