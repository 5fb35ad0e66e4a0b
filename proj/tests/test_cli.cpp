#include "cli.hpp"

#include "avw/spec_json.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using avw::Json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = avw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(AVW_SPEC_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("avw_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "--spec", spec("h.json"), "--identity", "2,2,2"}).code == 0);
    const Run bad = run({"verify", "--spec", spec("starHstarH.json"), "--identity", "1,1,2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("witness x =") != std::string::npos);
    CHECK(run({"verify", "--spec", spec("of_crac.json"), "--identity", "x2yx2"}).code == 0);
    CHECK(run({"verify", "--spec", spec("h.json")}).code == 0);
    CHECK(run({"verify", "--spec", spec("h.json"), "--mode", "sample", "--trials", "3"}).code == 0);
}

TEST_CASE("verify json report") {
    const Run r = run({"verify", "--spec", spec("starHstarH.json"), "--identity", "1,1,2", "--format", "json"});
    const Json j = Json::parse(r.out);
    const Json& v = j["verdicts"][0];
    CHECK(v["identity"] == "1,1,2");
    CHECK(v["holds"] == false);
    CHECK(v["witness"].size() == 1);
    CHECK(v["residual_monomial"].is_string());
    for (const auto& c : v["witness"][0]) CHECK(c.is_string());
}

TEST_CASE("iso exit codes") {
    const Run r = run({"iso", "--spec", spec("h2_i_1.json"), "--spec2", spec("h2_j_1.json"), "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["isomorphic"] == true);
    CHECK(j["p"] == Json::parse(R"(["0", "1", "1", "0"])"));
    CHECK(run({"iso", "--spec", spec("h.json"), "--spec2", spec("starHstarH.json")}).code == 1);
    const Run self = run({"iso", "--spec", spec("h3_1_i.json"), "--spec2", spec("h3_1_i.json"), "--format", "json"});
    CHECK(self.code == 0);
    CHECK(Json::parse(self.out)["p"] == Json::parse(R"(["1", "0", "0", "0"])"));
    CHECK(run({"iso", "--spec", spec("h.json"), "--spec2", spec("octonions.json")}).code == 2);
    CHECK(run({"iso", "--spec", spec("h.json")}).code == 2);
}

TEST_CASE("classify, enumerate, degree, subalgebras") {
    const Run c = run({"classify", "--spec", spec("h3_1_i.json"), "--format", "json"});
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out)["label"] == "H*(1,i)");
    const Run circle = run({"classify", "--spec", spec("h2_circle_3_5.json"), "--format", "json"});
    const Json cj = Json::parse(circle.out);
    CHECK(cj["invariants"]["abs_cos_alpha"] == "3/5");
    CHECK(cj["invariants"]["pi_minus_alpha_isomorphic"] == true);
    const Run e = run({"enumerate", "--identity", "1,1,1", "--format", "json"});
    CHECK(e.code == 0);
    CHECK(Json::parse(e.out)["N"] == 2);
    CHECK(Json::parse(run({"enumerate", "--identity", "2,1,2", "--format", "json"}).out)["N"] == "infinite");
    const Run d = run({"degree", "--spec", spec("of_crac.json"), "--trials", "20", "--format", "json"});
    CHECK(Json::parse(d.out)["degree_lower_bound"] == 8);
    const Run s = run({"subalgebras", "--spec", spec("h2_i_1.json"), "--format", "json"});
    CHECK(s.code == 0);
    CHECK(Json::parse(s.out)["dim2_embeddings"].size() >= 1);
    CHECK(run({"experiment-4.8", "--spec", spec("of_crac.json")}).code == 0);
    CHECK(run({"experiment-4.8", "--spec", spec("h.json")}).code == 2);
}

TEST_CASE("table reproduces the classification") {
    const Run t = run({"table"});
    CHECK(t.code == 0);
    CHECK(t.out.find("| (x,x,x) | H, *H* | 2 |") != std::string::npos);
    CHECK(t.out.find("| (x,x^2,x^2) | H, H*, H*(1,i) | 3 |") != std::string::npos);
    CHECK(t.out.find("cos a in {1, 3/5, 5/13}") != std::string::npos);
    const Run csv = run({"table", "--format", "csv"});
    CHECK(csv.out.rfind("identity,classes,N\n", 0) == 0);
}

TEST_CASE("malformed input exits with 2") {
    const std::string decimal = temp_file("decimal.json", R"({"family":"H1","a":[0.6,0.8,0,0],"b":[1,0,0,0]})");
    const std::string nonunit = temp_file("nonunit.json", R"({"family":"H2","a":["1","1","0","0"],"b":["1","0","0","0"]})");
    const std::string broken = temp_file("broken.json", R"({"family":"H1", "a": [)");
    const std::string wrong = temp_file("wrong.json", R"({"family":"Q7"})");
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"verify"},
             {"verify", "--spec", spec("missing.json")},
             {"verify", "--spec", decimal},
             {"verify", "--spec", nonunit},
             {"verify", "--spec", broken},
             {"verify", "--spec", wrong},
             {"verify", "--spec", spec("h.json"), "--identity", "3,1,1"},
             {"verify", "--spec", spec("h.json"), "--mode", "guess"},
             {"verify", "--spec", spec("h.json"), "--trials", "0"},
             {"verify", "--spec", spec("h.json"), "--seed", "0xZZ"},
             {"verify", "--spec", spec("h.json"), "--format", "yaml"},
             {"enumerate"},
             {"enumerate", "--identity", "x2yx2"},
             {"classify", "--spec", spec("octonions.json")},
         }) {
        INFO(args.size());
        const Run r = run(args);
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("output is deterministic and honours --out, --seed and AVW_SEED") {
    const std::vector<std::string> args = {"verify", "--spec", spec("starHstarH.json"), "--mode", "sample", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> seeded = args;
    seeded.insert(seeded.end(), {"--seed", "12345"});
    ::setenv("AVW_SEED", "12345", 1);
    const std::string from_env = run(args).out;
    ::unsetenv("AVW_SEED");
    CHECK(from_env == run(seeded).out);
    const auto path = (std::filesystem::temp_directory_path() / "avw_test_out.json").string();
    std::vector<std::string> to_file = args;
    to_file.insert(to_file.end(), {"--out", path});
    const Run r = run(to_file);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run(args).out);
    CHECK(run({"table", "--format", "json"}).out == run({"table", "--format", "json"}).out);
}
