// Copyright 2026 The InfoFlow Authors
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

#include "infoflow/commands.hpp"
#include "infoflow/persist.hpp"

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace infoflow::cli {
namespace {

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("infoflow_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_config(const std::string& name, const std::string& extra = "") {
        fs::path p = dir_ / name;
        std::ofstream f(p);
        f << "n_values = [32, 64]\ns16 = 2\nm16 = 6\nl16 = 2\nselection = consecutive\n"
             "observables = [holevo, coherent]\nmax_tau = 1/4\nn_samples = 20\nmaster_seed = 11\n"
          << extra;
        return p;
    }

    int call(std::vector<std::string> args) {
        args.insert(args.begin(), "infoflow");
        std::vector<const char*> argv;
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        out_.str("");
        err_.str("");
        return main_entry(static_cast<int>(argv.size()), argv.data(), out_, err_);
    }

    fs::path dir_;
    std::ostringstream out_, err_;
};

TEST_F(CliTest, DepthZeroMeanIsSourceSize) {
    fs::path cfg = write_config("a.cfg");
    ASSERT_EQ(call({"run", "-c", cfg.string(), "-o", (dir_ / "r").string(), "-q"}), kExitOk) << err_.str();
    auto series = read_results_csv(dir_ / "r" / kResultsCsvName);
    ASSERT_EQ(series.size(), 4u);
    for (const auto& ts : series) {
        ASSERT_EQ(ts.layers.front(), 0u);
        EXPECT_DOUBLE_EQ(ts.mean.front(), 2.0 / 16) << ts.observable << " N=" << ts.n;
        EXPECT_DOUBLE_EQ(ts.variance.front(), 0.0);
    }
}

TEST_F(CliTest, RunsAreReproducibleAcrossThreadCounts) {
    fs::path cfg = write_config("a.cfg");
    ASSERT_EQ(call({"run", "-c", cfg.string(), "-o", (dir_ / "r1").string(), "-q", "-j", "1"}), kExitOk);
    ASSERT_EQ(call({"run", "-c", cfg.string(), "-o", (dir_ / "r2").string(), "-q", "-j", "4"}), kExitOk);
    EXPECT_EQ(read_text_file(dir_ / "r1" / kResultsCsvName), read_text_file(dir_ / "r2" / kResultsCsvName));
}

TEST_F(CliTest, OverridesApply) {
    fs::path cfg = write_config("a.cfg");
    ASSERT_EQ(call({"run", "-c", cfg.string(), "-o", (dir_ / "r").string(), "-q", "--set", "n_values=[16]"}),
              kExitOk);
    auto series = read_results_csv(dir_ / "r" / kResultsCsvName);
    ASSERT_EQ(series.size(), 2u);
    EXPECT_EQ(series[0].n, 16u);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(call({"run", "-c", (dir_ / "missing.cfg").string(), "-o", (dir_ / "r").string()}), kExitInvalidConfig);
    fs::path bad = write_config("bad.cfg", "bogus_key = 3\n");
    EXPECT_EQ(call({"run", "-c", bad.string(), "-o", (dir_ / "r").string()}), kExitInvalidConfig);
    EXPECT_EQ(call({"analyze", "-i", (dir_ / "nowhere").string(), "-o", (dir_ / "a").string()}), kExitIo);
    EXPECT_EQ(call({"fit", "--kind", "spline", "-o", (dir_ / "f").string()}), kExitInvalidConfig);
    EXPECT_NE(call({"frobnicate"}), kExitOk);
}

TEST_F(CliTest, MixedConventionsNeedForce) {
    fs::path a = write_config("a.cfg");
    fs::path b = write_config("b.cfg", "cnot_orientation = control_left\n");
    ASSERT_EQ(call({"run", "-c", a.string(), "-o", (dir_ / "ra").string(), "-q"}), kExitOk);
    ASSERT_EQ(call({"run", "-c", b.string(), "-o", (dir_ / "rb").string(), "-q"}), kExitOk);
    const std::vector<std::string> base{"analyze", "-i", (dir_ / "ra").string(), "-i", (dir_ / "rb").string(),
                                        "-o", (dir_ / "an").string(), "--window", "0.05:0.25"};
    EXPECT_EQ(call(base), kExitBadInput);
    EXPECT_NE(err_.str().find("--force"), std::string::npos);
    std::vector<std::string> forced = base;
    forced.push_back("--force");
    EXPECT_EQ(call(forced), kExitOk) << err_.str();
    // The report only lists each run's conventions, so it never refuses.
    EXPECT_EQ(call({"report", "-i", (dir_ / "ra").string(), "-i", (dir_ / "rb").string(), "-o",
                    (dir_ / "rep").string()}),
              kExitOk);
}

TEST_F(CliTest, AnalyzeWritesArtifacts) {
    fs::path cfg = write_config("a.cfg", "");
    ASSERT_EQ(call({"run", "-c", cfg.string(), "-o", (dir_ / "r").string(), "-q", "--set", "max_tau=1/2"}),
              kExitOk);
    ASSERT_EQ(call({"analyze", "-i", (dir_ / "r").string(), "-o", (dir_ / "an").string(), "--window", "0.1:0.45"}),
              kExitOk)
        << err_.str();
    for (const char* f : {"analysis.json", "raw.csv", "derivative.csv", "kinks.csv"}) {
        EXPECT_TRUE(fs::exists(dir_ / "an" / f)) << f;
    }
    ASSERT_EQ(call({"report", "-i", (dir_ / "r").string(), "--artifact", (dir_ / "an" / "analysis.json").string(),
                    "-o", (dir_ / "rep").string()}),
              kExitOk)
        << err_.str();
    EXPECT_TRUE(fs::exists(dir_ / "rep" / "report.md"));
}

TEST_F(CliTest, VelocityFitFromPoints) {
    ASSERT_EQ(call({"fit", "--kind", "velocity", "-o", (dir_ / "f").string(), "--point", "0.125:0.625", "--point",
                    "0.25:1.25"}),
              kExitOk)
        << err_.str();
    std::string json = read_text_file(dir_ / "f" / "fit.json");
    EXPECT_NE(json.find("\"v0\""), std::string::npos);
}

TEST_F(CliTest, SmallValidatePasses) {
    EXPECT_EQ(call({"validate", "--instances", "6", "-o", (dir_ / "v").string()}), kExitOk) << out_.str();
    EXPECT_TRUE(fs::exists(dir_ / "v" / "validate.json"));
}

TEST(ParsePair, Forms) {
    EXPECT_EQ(parse_pair("0.1:0.5"), std::make_pair(0.1, 0.5));
    EXPECT_THROW(parse_pair("0.1"), std::exception);
}

}  // namespace
}  // namespace infoflow::cli
