#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qgrass/config.hpp"
#include "qgrass/json_io.hpp"

using namespace qgrass;
using nlohmann::json;
using nlohmann::ordered_json;

TEST_SUITE("io") {

TEST_CASE("family files round-trip and re-dump byte-identically") {
    Ambient amb(2, 5);
    Family fam = build_h1(Subspace::full(amb), coordinate_subspace(amb, 1), 2);
    const std::string path = "io_family.json";
    save_family(path, fam);
    Family back = load_family(path);
    CHECK(back.ambient() == amb);
    CHECK(back.k() == 2);
    CHECK(back.members() == fam.members());
    std::string first = read_text_file(path);
    save_family(path, back);
    CHECK(read_text_file(path) == first);
}

TEST_CASE("loader canonicalizes generating rows") {
    json j;
    j["q"] = 2;
    j["n"] = 4;
    j["k"] = 2;
    // same plane written with a messy basis
    j["subspaces"] = json::array({json::array(
        {json::array({1, 1, 0, 0}), json::array({0, 1, 0, 0})})});
    Family fam = family_from_json(j);
    Ambient amb(2, 4);
    CHECK(fam[0] == canonicalize(amb, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
}

TEST_CASE("loader rejects malformed families") {
    json good;
    good["q"] = 2;
    good["n"] = 4;
    good["k"] = 2;
    good["subspaces"] = json::array({json::array(
        {json::array({1, 0, 0, 0}), json::array({0, 1, 0, 0})})});

    json j = good;
    j["subspaces"][0][1] = json::array({1, 0, 0, 0}); // repeated row
    CHECK_THROWS_WITH_AS(family_from_json(j), doctest::Contains("rank-deficient"),
                         IoError);

    j = good;
    j["subspaces"][0] = json::array({json::array({1, 0, 0, 0})}); // dim 1, k 2
    CHECK_THROWS_WITH_AS(family_from_json(j), doctest::Contains("dimension"), IoError);

    j = good;
    j.erase("k");
    CHECK_THROWS_AS(family_from_json(j), IoError);

    j = good;
    j["subspaces"][0][0][2] = 5; // entry outside GF(2)
    CHECK_THROWS_AS(family_from_json(j), IoError);

    j = good;
    j["subspaces"][0][0] = json::array({1, 0, 0}); // short row
    CHECK_THROWS_AS(family_from_json(j), IoError);

    j = good;
    j["k"] = 9;
    CHECK_THROWS_AS(family_from_json(j), IoError);

    CHECK_THROWS_AS(family_from_json(json::array()), IoError);
    CHECK_THROWS_AS(load_family("does_not_exist.json"), IoError);
}

TEST_CASE("parameter points round-trip, optional fields included") {
    ParamPoint p;
    p.n = 9;
    p.k = 3;
    p.t = 1;
    p.s = 2;
    p.q = 3;
    p.x = 2;
    ordered_json j = point_to_json(p);
    ParamPoint back = point_from_json(json::parse(j.dump()));
    CHECK(back.n == 9);
    CHECK(back.k == 3);
    CHECK(back.t == 1);
    CHECK(back.s == 2);
    CHECK(back.q == 3);
    CHECK(back.x.has_value());
    CHECK(*back.x == 2);
    CHECK(!back.l.has_value());

    std::vector<ParamPoint> pts = points_from_json(json::parse(R"([{"n":4,"k":2}])"));
    CHECK(pts.size() == 1);
    CHECK(pts[0].n == 4);
    CHECK(pts[0].s == 1); // default filled in
    CHECK_THROWS_AS(points_from_json(json::object()), IoError);
    CHECK_THROWS_AS(point_from_json(json::parse(R"({"n":"four"})")), IoError);
}

TEST_CASE("sequence traces serialize as indices into their families") {
    Ambient amb(2, 4);
    Subspace a = canonicalize(amb, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Subspace b = canonicalize(amb, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    Family f(amb, 2, {a});
    Family g(amb, 2, {b});
    SequenceTrace tr = disjointness_sequence(f, g, 1);
    ordered_json j = trace_to_json(tr, f, g);
    CHECK(j["m"].get<long>() == 1);
    CHECK(j["f_indices"].size() == 1);
    CHECK(f[j["f_indices"][0].get<long>()] == tr.f_seq[0]);
    CHECK(g[j["g_indices"][0].get<long>()] == tr.g_seq[0]);
    CHECK(j["survivors"].size() == 2);
    CHECK(j["cover_witness_index"].is_null());

    Subspace e = coordinate_subspace(amb, 1);
    Family h1 = build_h1(Subspace::full(amb), e, 2);
    SequenceTrace tw = disjointness_sequence(h1, h1, 1);
    ordered_json jw = trace_to_json(tw, h1, h1);
    CHECK(jw["cover_witness_index"].is_number_integer());
    CHECK(h1[jw["cover_witness_index"].get<long>()] == *tw.cover_witness);
}

TEST_CASE("lemma verdicts serialize with bounds only when evaluated") {
    LemmaVerdict met;
    met.lemma_id = "f1-decreasing";
    met.point.n = 9;
    met.point.k = 3;
    met.point.x = 2;
    met.hypothesis_met = true;
    met.claim_holds = true;
    met.lhs = 5;
    met.rhs = 7;
    ordered_json j = verdict_to_json(met);
    CHECK(j["lemma_id"].get<std::string>() == "f1-decreasing");
    CHECK(j["x"].get<long>() == 2);
    CHECK(j["lhs"].get<std::string>() == "5");
    LemmaVerdict unmet;
    unmet.lemma_id = "f1-decreasing";
    ordered_json ju = verdict_to_json(unmet);
    CHECK(!ju.contains("lhs"));
    CHECK(!ju["hypothesis_met"].get<bool>());
}

TEST_CASE("config files load and validate") {
    const std::string path = "io_config.json";
    write_text_file(path, R"({
      "enumeration_budget": 1234,
      "default_q_list": [2, 5],
      "output_dir": "certs",
      "jobs": 3,
      "suite_grids": {"f1-decreasing": [{"n": 9, "k": 3, "t": 1, "s": 1, "q": 2}]}
    })");
    Config cfg = load_config(path);
    CHECK(cfg.enumeration_budget == 1234);
    CHECK(cfg.default_q_list == std::vector<int>{2, 5});
    CHECK(cfg.output_dir == "certs");
    CHECK(cfg.jobs == 3);
    REQUIRE(cfg.suite_grids.count("f1-decreasing") == 1);
    CHECK(cfg.suite_grids["f1-decreasing"].size() == 1);
    CHECK(cfg.suite_grids["f1-decreasing"][0].n == 9);

    write_text_file(path, R"({"enumeration_budget": 0})");
    CHECK_THROWS_AS(load_config(path), IoError);
    write_text_file(path, R"({"jobs": -1})");
    CHECK_THROWS_AS(load_config(path), IoError);
    write_text_file(path, R"({"default_q_list": []})");
    CHECK_THROWS_AS(load_config(path), IoError);
    write_text_file(path, R"([1,2,3])");
    CHECK_THROWS_AS(load_config(path), IoError);
    write_text_file(path, "{nonsense");
    CHECK_THROWS_AS(load_config(path), IoError);
    CHECK_THROWS_AS(load_config("missing_config.json"), IoError);
}

TEST_CASE("config_from_env honours QGRASS_CONFIG") {
    unsetenv("QGRASS_CONFIG");
    Config plain = config_from_env();
    CHECK(plain.enumeration_budget == kDefaultBudget);
    const std::string path = "io_env_config.json";
    write_text_file(path, R"({"enumeration_budget": 777})");
    setenv("QGRASS_CONFIG", path.c_str(), 1);
    Config fromEnv = config_from_env();
    unsetenv("QGRASS_CONFIG");
    CHECK(fromEnv.enumeration_budget == 777);
    setenv("QGRASS_CONFIG", "", 1);
    CHECK(config_from_env().enumeration_budget == kDefaultBudget);
    unsetenv("QGRASS_CONFIG");
}

TEST_CASE("text file helpers fail loudly") {
    CHECK_THROWS_AS(read_text_file("no_such_file_here.txt"), IoError);
    write_text_file("io_roundtrip.txt", "abc\n");
    CHECK(read_text_file("io_roundtrip.txt") == "abc\n");
}

} // TEST_SUITE
