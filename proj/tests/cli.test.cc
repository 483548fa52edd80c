// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gtest/gtest.h"

#include "json.hpp"
#include "qadvice/config.h"

using namespace qadvice;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qadvice");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli((int)argv.size(), argv.data(), out, err);
    reset_tolerances();
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &stem, const std::string &contents) {
    auto path = (std::filesystem::temp_directory_path() / (stem + std::to_string(::getpid()))).string();
    std::ofstream(path) << contents;
    return path;
}

const json *find_check(const json &doc, const std::string &name) {
    for (const auto &c : doc["checks"]) {
        if (c["name"] == name) {
            return &c;
        }
    }
    return nullptr;
}

}  // namespace

TEST(cli, fingerprint_example) {
    auto r = run({"fingerprint", "--n", "8", "--f", "2", "--members", "4", "--trials", "1000", "--seed", "7"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["command"], "fingerprint");
    EXPECT_EQ(doc["seed"], 7);
    EXPECT_TRUE(doc.contains("timestamp"));
    EXPECT_TRUE(doc["pass"].get<bool>());
    for (const auto &m : doc["results"]["members"]) {
        EXPECT_EQ(m["probability"]["exact"], "1");
    }
    EXPECT_LT(doc["results"]["max_non_member_probability"]["value"].get<double>(), 0.25);
    EXPECT_TRUE(doc["tolerances"].contains("exact_match"));
}

TEST(cli, amplify_example) {
    auto r = run({"amplify", "--p", "2/3", "--t", "3"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["results"]["value"]["exact"], "20/27");
    EXPECT_NEAR(doc["results"]["value"]["value"].get<double>(), 0.740740, 1e-6);
}

TEST(cli, amplify_copies) {
    auto r = run({"amplify", "--p", "2/3", "--eps", "1/1024"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["results"]["copies"].get<uint64_t>() % 2, 1u);
    EXPECT_TRUE(find_check(doc, "copies_minimal")->at("pass").get<bool>());
}

TEST(cli, qrac_bound_example) {
    auto r = run({"qrac", "--bound", "--n", "2", "--p", "0.853553"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_EQ(json::parse(r.out)["results"]["m_min"], 1);
}

TEST(cli, qrac_csv_columns) {
    auto r = run({"qrac", "--bound", "--n", "10", "--p", "0.75", "--format", "csv"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,m,best_p,bound_floor");
}

TEST(cli, qrac_schemes) {
    auto r = run({"qrac", "--schemes", "--no-timestamp"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_NEAR(doc["results"]["rac21"]["success"].get<double>(), 0.8535534, 1e-7);
    EXPECT_NEAR(doc["results"]["rac31"]["success"].get<double>(), 0.7886751, 1e-7);
}

TEST(cli, amplitude_decode) {
    auto r = run({"amplitude", "decode", "--digits", "+-+-", "--k", "3"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_TRUE(doc["results"]["decision"].get<bool>());
    EXPECT_TRUE(doc["results"].contains("exact_frac"));
    auto g = run({"amplitude", "decode", "--digits", "+-+-", "--k", "2", "--gateset", "--eps", "1e-2"});
    ASSERT_EQ(g.code, EXIT_OK) << g.err;
    EXPECT_FALSE(json::parse(g.out)["results"]["decision"].get<bool>());
}

TEST(cli, synth_state_from_file) {
    auto path = temp_file("qadvice_amps_", "# |+>\n0.7071067811865476 0\n0.7071067811865476 0\n");
    auto r = run({"synth", "state", "--target", path, "--eps", "0.1"});
    std::remove(path.c_str());
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["results"]["size"], 1);
    EXPECT_EQ(doc["results"]["circuit"], "width 1\nH 0\n");
    EXPECT_EQ(doc["results"]["code"], "510101010000");
}

TEST(cli, synth_unitary_from_file) {
    auto path = temp_file("qadvice_cnot_",
                          "1 0 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 0 0 0 1 0\n0 0 0 0 1 0 0 0\n");
    auto r = run({"synth", "unitary", "--matrix", path, "--eps", "0.01"});
    std::remove(path.c_str());
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_EQ(json::parse(r.out)["results"]["size"], 1);
}

TEST(cli, diag_found_and_verified) {
    json c = {{"id", 1}, {"n", 2}, {"advice_len", 1}, {"table", {{0, 0, 0, 0}, {0, 0, 0, 0}}}};
    auto path = temp_file("qadvice_machines_", json::array({c}).dump());
    auto r = run({"diag", "--n", "2", "--f", "1", "--machines", path});
    std::remove(path.c_str());
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_TRUE(doc["results"]["found"].get<bool>());
    EXPECT_EQ(doc["results"]["set"], json::array({"00"}));
    EXPECT_TRUE(doc["results"]["verification"][0]["escaped"].get<bool>());
}

TEST(cli, determinism_without_timestamp) {
    std::vector<std::string> args{"fingerprint", "--n", "6", "--f", "1", "--members", "2",
                                  "--trials", "200", "--seed", "3", "--no-timestamp"};
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.code, EXIT_OK);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(json::parse(a.out).contains("timestamp"));
}

TEST(cli, pretty_json) {
    auto r = run({"amplify", "--p", "2/3", "--t", "3", "--json-pretty"});
    EXPECT_NE(r.out.find("\n  \"checks\""), std::string::npos);
}

TEST(cli, output_file) {
    auto path = (std::filesystem::temp_directory_path() / ("qadvice_out_" + std::to_string(::getpid()))).string();
    auto r = run({"amplify", "--p", "2/3", "--t", "3", "--output", path});
    ASSERT_EQ(r.code, EXIT_OK);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    json doc = json::parse(in);
    EXPECT_EQ(doc["results"]["value"]["exact"], "20/27");
    std::remove(path.c_str());
}

TEST(cli, tolerance_override) {
    auto r = run({"amplify", "--p", "2/3", "--t", "3", "--tol", "exact_match=1e-9"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_EQ(json::parse(r.out)["tolerances"]["exact_match"], 1e-9);
    EXPECT_EQ(tolerances().exact_match, 1e-12);
    EXPECT_EQ(run({"amplify", "--p", "2/3", "--t", "3", "--tol", "bogus=1"}).code, EXIT_ASSERTION);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run({"frobnicate"}).code, EXIT_USAGE);
    EXPECT_EQ(run({}).code, EXIT_USAGE);
    EXPECT_EQ(run({"amplify", "--format", "xml"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"synth", "state", "--target", "/nonexistent/amps", "--eps", "0.1"}).code, EXIT_IO);
    EXPECT_EQ(run({"amplify", "--p", "2/3", "--t", "3", "--output", "/nonexistent/dir/out.json"}).code, EXIT_IO);
    EXPECT_EQ(run({"amplify", "--p", "2/3", "--t", "4"}).code, EXIT_ASSERTION);
}
