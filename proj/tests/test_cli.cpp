#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hirz/cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hirz;
using namespace hirz::cli;

namespace {

std::string data(const std::string& name) { return std::string(HIRZ_DATA_DIR) + "/" + name; }

Json run_json(const std::string& cmd, const Json& in, std::optional<Integer> gamma = std::nullopt) {
    const auto r = run(cmd, in, "json", gamma);
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    const Json out = Json::parse(r.out);
    CHECK(dump(out) == r.out);  // canonical form round-trips byte for byte
    return out;
}

std::string temp_file(const std::string& content) {
    static int counter = 0;
    const std::string path = (std::filesystem::temp_directory_path() /
                              ("hirz_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                                 .string();
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("lattice") {
    auto out = run_json("lattice", Json::parse(R"({"e":2,"a":[1,0],"b":[1,0]})"));
    CHECK(out["intersect"] == 2);
    out = run_json("lattice", Json::parse(R"({"e":0,"a":[2,3]})"));
    CHECK(out["a"]["h0"] == 12);
    CHECK(out["a"]["volume"] == 12);
    CHECK(out["a"]["big"] == true);
    out = run_json("lattice", Json::parse(R"({"e":1,"a":[1,-1]})"));
    CHECK(out["a"]["effective"] == true);
    CHECK(out["a"]["h0"] == 1);
    CHECK(out["a"]["big"] == false);
    out = run_json("lattice", Json::parse(R"({"e":2,"a":[3,-1]})"));
    CHECK(out["a"]["volume"] == "25/2");
    CHECK(out["a"]["arithmetic_genus"].is_null());

    CHECK(run("lattice", Json::parse(R"({"e":-1,"a":[1,0]})"), "json").exit_code == Validation);
    CHECK(run("lattice", Json::parse(R"({"e":1,"a":[1]})"), "json").exit_code == Validation);
    CHECK(run("lattice", Json::parse(R"({"e":1,"a":["x",1]})"), "json").exit_code == Validation);
    CHECK(run("lattice", Json::parse(R"({"a":[1,1]})"), "json").exit_code == Validation);
}

TEST_CASE("germ") {
    auto out = run_json("germ", Json::parse(R"({"f":"y^2 - x^5"})"));
    CHECK(out["multiplicity"] == 2);
    CHECK(out["sequence"] == Json::array({2, 2, 1}));
    CHECK(out["delta"] == 2);
    out = run_json("germ", Json::parse(R"({"f":"y^2 - x^5","g":"y"})"));
    CHECK(out["intersection"] == 5);
    CHECK(out["fz_set"] == Json::array({2, 4, 5}));
    CHECK(out["in_fz_set"] == true);
    CHECK(out["delta_bound"]["value"] == 2);
    CHECK(out["delta_bound"]["equality"] == true);

    out = run_json("germ", Json::parse(R"({"f":"y - x^2 - 1","point":[1,2]})"));
    CHECK(out["multiplicity"] == 1);

    auto r = run("germ", Json::parse(R"({"f":"y^2 - x^2"})"), "text");
    CHECK(r.exit_code == Computation);
    CHECK(r.err.find("directions") != std::string::npos);
    r = run("germ", Json::parse(R"({"f":"y^2 - x^^5"})"), "json");
    CHECK(r.exit_code == Validation);
    CHECK(r.err.find("position 8") != std::string::npos);
    CHECK(run("germ", Json::parse(R"({"f":"y - 1"})"), "json").exit_code == Validation);
    CHECK(run("germ", Json::parse(R"({"f":"y","g":"y"})"), "json").exit_code == Computation);
}

TEST_CASE("bound") {
    auto out = run_json("bound", Json::parse(R"({"e":0,"components":[[1,1],[1,1],[1,1]]})"));
    CHECK(out["total"]["numeric_part"] == 24);
    CHECK(out["total"]["kind"] == "numeric");
    out = run_json("bound", Json::parse(R"({"e":2,"components":[[1,0],[1,0],[1,0]]})"));
    CHECK(out["total"]["numeric_part"] == 19);
    out = run_json("bound", Json::parse(R"({"e":1,"components":[[1,0],[1,0],[1,1]],"gamma":1146880})"));
    CHECK(out["i_set_bound"] == 21);
    // The flag wins over the file.
    out = run_json("bound", Json::parse(R"({"e":1,"components":[[1,0],[1,0],[1,1]],"gamma":5})"), Integer(1146880));
    CHECK(out["i_set_bound"] == 21);
    out = run_json("bound", Json::parse(R"({"e":1,"components":[[1,0],[1,0],[1,1]]})"));
    CHECK_FALSE(out.contains("i_set_bound"));
    CHECK(out["i_set_expression"] == "1 + floor(log_2(gamma - 1))");

    auto r = run("bound", Json::parse(R"({"e":0,"components":[[1,1],[1,1],[0,1]]})"), "json");
    CHECK(r.exit_code == Validation);
    CHECK(r.err.find("fiber") != std::string::npos);
    r = run("bound", Json::parse(R"({"e":1,"components":[[1,1],[2,1],[3,0]]})"), "json");
    CHECK(r.exit_code == Validation);
    CHECK(r.err.find("hypothesis-not-met") != std::string::npos);
    CHECK(run("bound", Json::parse(R"({"e":1,"components":[[1,0],[1,0],[1,1]],"gamma":"3/2"})"), "json").exit_code ==
          Validation);
    CHECK(run("bound", Json::parse(R"({"e":1,"components":[[1,0],[1,0],[1,1]]})"), "json", Integer(0)).exit_code ==
          Validation);
}

TEST_CASE("verify") {
    auto out = run_json("verify", read_json_file(data("f0_33_cubed.json")));
    CHECK(out["found_count"] == 0);
    CHECK(out["n_points"] == 54);
    out = run_json("verify", read_json_file(data("f0_11_cubed.json")));
    CHECK(out["found_count"].get<int>() <= 24);
    CHECK(out["within_bound"] == true);

    const auto r = run("verify", read_json_file(data("f0_tangential.json")), "json");
    CHECK(r.exit_code == Computation);
    CHECK(r.err.find("non-transverse") != std::string::npos);
    CHECK(run("verify", read_json_file(data("f0_irrational.json")), "json").exit_code == Computation);
}

TEST_CASE("text output and dispatch errors") {
    const auto r = run("bound", Json::parse(R"({"e":0,"components":[[1,1],[1,1],[1,1]]})"), "text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("numeric_part: 24") != std::string::npos);
    CHECK(run("nope", Json::object(), "json").exit_code == Validation);
    CHECK(run("bound", Json::object(), "yaml").exit_code == Validation);
}

TEST_CASE("file input") {
    RunConfig cfg;
    cfg.command = "lattice";
    cfg.format = "json";
    cfg.input_path = temp_file(R"({"e":3,"a":[1,0],"b":[1,0]})");
    auto r = run(cfg);
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out)["intersect"] == 3);
    std::remove(cfg.input_path.c_str());

    cfg.input_path = temp_file("{not json");
    r = run(cfg);
    CHECK(r.exit_code == Validation);
    std::remove(cfg.input_path.c_str());

    cfg.input_path = "/nonexistent/file.json";
    CHECK(run(cfg).exit_code == Validation);
}
