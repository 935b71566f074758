#include "osp/cli.hpp"
#include "osp/io.hpp"

#include <doctest.h>

#include <sstream>

using osp::io::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run osp_run(std::vector<std::string> args) {
    args.insert(args.begin(), "osp");
    std::ostringstream out, err;
    int code = osp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("roots listing") {
    Run r = osp_run({"roots", "--type", "c", "--m", "2", "--n", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("count") == 12);
    CHECK(j.at("roots").size() == 12);
    Run t = osp_run({"roots", "--type", "c", "--m", "2", "--n", "3", "--format", "text"});
    CHECK(t.out.find("(4,5)  even  ht 8") != std::string::npos);
}

TEST_CASE("crystal-op reproduces the d_{3|3} string") {
    std::string elem =
        R"({"c":{"1,3":2,"1,5":1,"2,3":1,"2,4":1,"2,6":1,"3,4":1,"3,6":1,"4,4":2,"4,5":2,"4,6":3,"5,5":1,"5,6":2}})";
    Run r = osp_run({"crystal-op", "--type", "d", "--m", "3", "--n", "3", "--ops", "f4^6", "--element", elem});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("result").dump() ==
          R"({"c":{"1,3":2,"2,3":1,"2,4":1,"1,5":1,"3,5":1,"4,5":2,"5,5":3,"2,6":1,"3,6":1,"4,6":2,"5,6":3}})");
    CHECK(j.at("string_data")[4].at("phi") == 6);
    CHECK(j.at("string_data")[4].at("eps") == 2);
    Run z = osp_run({"crystal-op", "--type", "d", "--m", "3", "--n", "3", "--ops", "f4^7", "--element", elem});
    CHECK(z.code == 0);
    CHECK(json::parse(z.out).at("result").is_null());
    CHECK(json::parse(z.out).at("vanished_at") == 6);
}

TEST_CASE("crystal-op on c (x) T, operators left to right") {
    Run r = osp_run({"crystal-op", "--type", "b", "--m", "2", "--n", "2", "--lambda", "1", "--ops", "f1 e1 f0"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("ops") == "f1 e1 f0");
    CHECK(j.at("result").at("c").dump() == R"({"1,1":1})");
    CHECK(j.at("result").at("tableau").dump() == "[[1]]");
}

TEST_CASE("tableau subcommand") {
    Run r = osp_run({"tableau", "--m", "2", "--n", "3", "--lambda", "5,3,3,2,2", "--tableau",
                     "[[1,1,1,2,2],[2,2,3],[3,4,5],[4,5],[4,5]]", "--ops", "f1"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("result").dump() == "[[1,1,2,2,2],[2,2,3],[3,4,5],[4,5],[4,5]]");
}

TEST_CASE("verify commutators") {
    Run r = osp_run({"verify", "commutators", "--type", "b", "--m", "2", "--n", "3"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("total") == 105);
    CHECK(j.at("passed") == 105);
}

TEST_CASE("commutator subcommand") {
    Run r = osp_run({"commutator", "--type", "c", "--m", "2", "--n", "2", "--alpha", "1,1", "--beta", "1,2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("check").at("pass") == true);
    Run bad = osp_run({"commutator", "--type", "c", "--m", "2", "--n", "2", "--alpha", "1,2", "--beta", "1,1"});
    CHECK(bad.code == osp::cli::usage_error);
}

TEST_CASE("graph, hw-scan and decompose") {
    Run dot = osp_run({"graph", "--type", "b", "--m", "2", "--n", "2", "--lambda", "1", "--max-degree", "1",
                       "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph crystal {", 0) == 0);
    Run hw = osp_run({"hw-scan", "--type", "b", "--m", "2", "--n", "2", "--lambda", "1", "--max-degree", "4"});
    CHECK(hw.code == 0);
    CHECK(json::parse(hw.out).at("sources").size() == 1);
    Run fake = osp_run({"hw-scan", "--type", "b", "--m", "2", "--n", "2", "--lambda", "1,1", "--max-degree", "5",
                        "--walk"});
    CHECK(fake.code == osp::cli::verification_failed);
    CHECK(json::parse(fake.out).at("disconnected") == 0);
    Run dec = osp_run({"decompose", "--type", "c", "--m", "2", "--n", "2", "--max-degree", "4"});
    CHECK(dec.code == 0);
    CHECK(json::parse(dec.out).at("ok") == true);
}

TEST_CASE("usage errors and resource errors") {
    CHECK(osp_run({}).code == osp::cli::usage_error);
    CHECK(osp_run({"roots", "--type", "x", "--m", "2", "--n", "2"}).code == osp::cli::usage_error);
    CHECK(osp_run({"roots", "--bogus"}).code == osp::cli::usage_error);
    CHECK(osp_run({"roots", "--type", "b", "--m", "1", "--n", "2"}).code == osp::cli::usage_error);
    CHECK(osp_run({"crystal-op", "--type", "b", "--m", "2", "--n", "2", "--ops", "g1"}).code == osp::cli::usage_error);
    CHECK(osp_run({"crystal-op", "--type", "b", "--m", "2", "--n", "2", "--ops", "f1", "--element", "{"}).code ==
          osp::cli::usage_error);
    CHECK(osp_run({"graph", "--type", "b", "--m", "2", "--n", "2", "--lambda", "1"}).code == osp::cli::usage_error);
    CHECK(osp_run({"roots", "--type", "b", "--m", "2", "--n", "2", "--format", "dot"}).code == osp::cli::usage_error);
    CHECK(osp_run({"graph", "--type", "b", "--m", "3", "--n", "3", "--lambda", "2,1", "--max-degree", "6",
                   "--vertex-cap", "100"})
              .code == osp::cli::resource_error);
    CHECK(osp_run({"--help"}).code == 0);
}

TEST_CASE("identical runs give identical output") {
    std::vector<std::string> args = {"graph", "--type", "c", "--m", "2", "--n", "2", "--lambda", "2,1",
                                     "--max-degree", "3", "--threads", "4"};
    Run a = osp_run(args);
    Run b = osp_run(args);
    args.back() = "1";
    Run c = osp_run(args);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}
