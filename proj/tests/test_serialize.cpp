#include "doctest.h"

#include <stdexcept>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cy2/cache.hpp"
#include "cy2/render.hpp"
#include "cy2/serialize.hpp"

using namespace cy2;

TEST_CASE("geometry round trips") {
  const DiagonalSet u(15, {{1, 3}, {4, 9}});
  CHECK(diagonal_set_from_json(to_json(u)) == u);
  CHECK(to_json(u).dump() == R"({"diagonals":[[1,3],[4,9]],"ngon":15})");
  CHECK(arc_from_json(to_json(ArcD::pair(1, 3, 4)), 4) == ArcD::pair(1, 3, 4));
  CHECK(arc_from_json(to_json(ArcD::diameter(2, Color::red, 4)), 4) ==
        ArcD::diameter(2, Color::red, 4));
  CHECK_THROWS_AS(diagonal_from_json(Json::parse("[1,2]"), 15), InputError);
  CHECK_THROWS_AS(diagonal_from_json(Json::parse("[1]"), 15), InputError);
  CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"diam":1,"color":"blue"})"), 4), InputError);
}

TEST_CASE("record round trip") {
  for (Family f : {Family::A, Family::D}) {
    const auto tb = build({f, 1, 1});
    const auto records = enumerate_torsion_pairs(tb);
    const Json j = records_to_json(records, tb, true);
    CHECK(j.size() == records.size());
    CHECK(j[0].contains("heart"));
    CHECK(records_from_json(Json::parse(j.dump()), tb.size()) == records);
  }
}

TEST_CASE("record parse errors") {
  CHECK_THROWS_AS(records_from_json(Json::object(), 4), InputError);
  CHECK_THROWS_AS(records_from_json(Json::parse(R"([{"x":[]}])"), 4), InputError);
  const auto tb = build({Family::A, 1, 1});
  Json j = records_to_json(enumerate_torsion_pairs(tb), tb, false);
  j[0]["x"] = Json::array({99});
  CHECK_THROWS_AS(records_from_json(j, tb.size()), InputError);
}

TEST_CASE("element forms") {
  const auto a = build({Family::A, 2, 2});
  const int id = element_from_json(a, Json::parse("[1,3]"));
  CHECK(element_from_json(a, Json::parse("[4,6]")) == id);
  CHECK(element_from_json(a, Json("(1,3)")) == id);
  CHECK(element_from_json(a, Json(id)) == id);
  CHECK_THROWS_AS(element_from_json(a, Json(100)), InputError);
  CHECK_THROWS_AS(element_from_json(a, Json::parse("[1,2]")), InputError);
  CHECK_THROWS_AS(element_from_json(a, Json::parse(R"([1,3,"+"])")), InputError);
  CHECK_THROWS_AS(element_from_json(a, Json("hello")), InputError);

  const auto d = build({Family::D, 1, 1});
  const int green = element_from_json(d, Json("(1,5+)"));
  CHECK(element_from_json(d, Json::parse(R"([1,5,"g"])")) == green);
  CHECK(element_from_json(d, Json::parse(R"({"diam":1,"color":"g"})")) == green);
  CHECK(element_from_json(d, Json("(1,5-)")) != green);
  CHECK_THROWS_AS(element_from_json(d, Json::parse("[1,5]")), InputError);
  CHECK_THROWS_AS(element_from_json(d, Json::parse(R"([1,3,"+"])")), InputError);
}

TEST_CASE("parse_set") {
  const auto a = build({Family::A, 2, 2});
  const IndecSet x = parse_set(a, "[[1,3],[1,4]]");
  CHECK(x.count() == 2);
  CHECK(parse_set(a, "(1,3),(1,4)") == x);
  CHECK(parse_set(a, "{(1,3), (1,4)}") == x);
  CHECK(parse_set(a, "[]").empty());
  CHECK_THROWS_AS(parse_set(a, "(1,3) junk"), InputError);
  CHECK_THROWS_AS(parse_set(a, "{\"a\":1}"), InputError);
  CHECK(labels_json(a, x) == Json::array({"(1,3)", "(1,4)"}));
}

TEST_CASE("tables json") {
  const auto a = build({Family::A, 1, 1});
  const Json j = tables_to_json(a);
  CHECK(j["indecs"].size() == a.size());
  CHECK(j["shift"].size() == a.size());
  CHECK(j.contains("hom_dims"));
  CHECK_FALSE(tables_to_json(build({Family::D, 1, 1})).contains("hom_dims"));
}

TEST_CASE("svg") {
  const std::string empty_d = render_svg(ArcSetD(4));
  CHECK(empty_d.rfind("<svg", 0) == 0);
  CHECK(empty_d.find("<line") == std::string::npos);
  CHECK(empty_d.find("</svg>") != std::string::npos);
  ArcSetD s(4);
  s.insert(ArcD::diameter(1, Color::red, 4));
  s.insert(ArcD::diameter(1, Color::green, 4));
  const std::string two = render_svg(s);
  CHECK(two.find("6,4") != std::string::npos);
  CHECK(two.find("#2a9d2a") != std::string::npos);
  const std::string a = render_svg(DiagonalSet(15, {{1, 3}}));
  CHECK(a.find("<line") != std::string::npos);
}

TEST_CASE("cache") {
  const auto dir = std::filesystem::temp_directory_path() / "cy2_cache_test";
  std::filesystem::remove_all(dir);
  ::setenv("CY2_CACHE_DIR", dir.c_str(), 1);
  const auto tb = build({Family::A, 2, 1});
  const auto file = cache_path(tb.spec());
  REQUIRE(file.has_value());
  CHECK(file->filename() == "A_2_1_v" + std::to_string(kCodeVersion) + ".json");
  const auto first = enumerate_halves_cached(tb);
  CHECK(std::filesystem::exists(*file));
  CHECK(enumerate_halves_cached(tb) == first);
  { std::ofstream(*file) << "not json"; }
  CHECK(enumerate_halves_cached(tb) == first);
  { std::ofstream(*file) << R"({"halves":[[0]]})"; }
  CHECK(enumerate_halves_cached(tb) == first);
  ::unsetenv("CY2_CACHE_DIR");
  CHECK_FALSE(cache_path(tb.spec()).has_value());
  std::filesystem::remove_all(dir);
}
