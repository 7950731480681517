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

#include "infoflow/config.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace infoflow {
namespace {

const char* kBase =
    "# comment line\n"
    "n_values = [64, 128]\n"
    "s16 = 2\n"
    "m16 = 6\n"
    "l16 = 2   # trailing comment\n"
    "selection = consecutive\n"
    "observables = [holevo, coherent]\n"
    "max_tau = 3/2\n"
    "n_samples = 10\n"
    "master_seed = 5\n";

TEST(Config, ParsesAllKeys) {
    SweepConfig c = parse_sweep_config(kBase);
    EXPECT_EQ(c.n_values, (std::vector<std::size_t>{64, 128}));
    EXPECT_EQ(c.geometry.m16, 6);
    EXPECT_TRUE(c.has(Observable::coherent));
    EXPECT_FALSE(c.has(Observable::private_check));
    EXPECT_EQ(c.max_tau, (Rational{3, 2}));
    EXPECT_EQ(c.n_samples, 10u);
    EXPECT_EQ(c.master_seed, 5u);
    EXPECT_EQ(c.cnot_orientation, CnotOrientation::random);
    EXPECT_EQ(c.layer_convention, LayerConvention::single_row);
}

TEST(Config, TextRoundTripAndHash) {
    SweepConfig c = parse_sweep_config(kBase);
    SweepConfig d = parse_sweep_config(c.to_text());
    EXPECT_EQ(c.to_text(), d.to_text());
    EXPECT_EQ(c.hash(), d.hash());
    std::vector<std::string> ov{"master_seed=6"};
    EXPECT_NE(parse_sweep_config(kBase, ov).hash(), c.hash());
}

TEST(Config, OverridesReplaceValues) {
    std::vector<std::string> ov{"l16 = 1", "n_values=[32]", "cnot_orientation=control_left", "record_stride=4"};
    SweepConfig c = parse_sweep_config(kBase, ov);
    EXPECT_EQ(c.geometry.l16, 1);
    EXPECT_EQ(c.n_values, (std::vector<std::size_t>{32}));
    EXPECT_EQ(c.cnot_orientation, CnotOrientation::control_left);
    EXPECT_EQ(c.stride_for(32), 4u);
}

TEST(Config, RecordLayers) {
    SweepConfig c = parse_sweep_config(kBase);
    // Auto stride is 1 up to N=128.
    auto layers = c.record_layers(64);
    ASSERT_EQ(layers.size(), 97u);
    EXPECT_EQ(layers.back(), 96u);
    std::vector<std::string> ov{"n_values=[512]", "max_tau=0.3"};
    SweepConfig big = parse_sweep_config(kBase, ov);
    EXPECT_EQ(big.stride_for(512), 4u);
    auto l = big.record_layers(512);
    EXPECT_EQ(l.front(), 0u);
    EXPECT_EQ(l[1], 4u);
    EXPECT_EQ(l.back(), 153u);  // floor(0.3 * 512) is always recorded
    EXPECT_EQ(big.max_layers(512), 153u);
}

TEST(Config, Rational) {
    EXPECT_EQ(Rational::parse("0.25"), (Rational{1, 4}));
    EXPECT_EQ(Rational::parse("6/4"), (Rational{3, 2}));
    EXPECT_EQ(Rational::parse("2"), (Rational{2, 1}));
    EXPECT_EQ(Rational::parse("3/2").floor_times(101), 151u);
    EXPECT_EQ(Rational::parse("7/3").to_string(), "7/3");
    EXPECT_THROW(Rational::parse("-1"), ConfigError);
    EXPECT_THROW(Rational::parse("1/0"), ConfigError);
    EXPECT_THROW(Rational::parse("abc"), ConfigError);
}

TEST(Config, Errors) {
    auto bad = [](std::vector<std::string> ov) { return [ov] { parse_sweep_config(kBase, ov); }; };
    EXPECT_THROW(bad({"colour=blue"})(), ConfigError);
    EXPECT_THROW(bad({"n_values=[60]"})(), ConfigError);
    EXPECT_THROW(bad({"n_samples=1"})(), ConfigError);
    EXPECT_THROW(bad({"observables=[entropy]"})(), ConfigError);
    EXPECT_THROW(bad({"selection=diagonal"})(), ConfigError);
    EXPECT_THROW(bad({"layer_convention=double_row"})(), ConfigError);
    EXPECT_THROW(bad({"n_values=64"})(), ConfigError);
    EXPECT_THROW(bad({"l16 2"})(), ConfigError);
    EXPECT_THROW(parse_sweep_config(std::string(kBase) + "s16 = 3\n"), ConfigError);
    EXPECT_THROW(parse_sweep_config("n_values = [64]\n"), ConfigError);
    EXPECT_THROW(load_sweep_config("/nonexistent/file.cfg"), ConfigError);
}

TEST(Config, ExplicitSets) {
    SweepConfig c = parse_sweep_config(
        "n_values = [10]\nsource_qubits = [2, 3]\nmeasure_qubits = [0, 1, 2, 3, 4]\nmax_tau = 1\n"
        "n_samples = 4\nmaster_seed = 1\n");
    EXPECT_TRUE(c.explicit_sets());
    EXPECT_EQ(c.selection_label(), "explicit");
    EXPECT_THROW(parse_sweep_config("n_values = [10, 12]\nsource_qubits = [2]\nmeasure_qubits = [0]\nmax_tau = 1\n"
                                    "n_samples = 4\nmaster_seed = 1\n"),
                 ConfigError);
}

}  // namespace
}  // namespace infoflow
