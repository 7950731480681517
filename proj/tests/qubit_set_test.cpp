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

#include "infoflow/qubit_set.hpp"

#include <gtest/gtest.h>

namespace infoflow {
namespace {

TEST(QubitSet, SortsMembers) {
    QubitSet s(8, {5, 1, 3});
    EXPECT_EQ(s.members(), (std::vector<std::size_t>{1, 3, 5}));
    EXPECT_EQ(s.to_string(), "{1,3,5}");
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(4));
}

TEST(QubitSet, RejectsBadMembers) {
    EXPECT_THROW(QubitSet(4, {1, 1}), std::invalid_argument);
    EXPECT_THROW(QubitSet(4, {4}), std::out_of_range);
}

TEST(QubitSet, RingIntervalWraps) {
    EXPECT_EQ(QubitSet::ring_interval(8, 6, 4), QubitSet(8, {6, 7, 0, 1}));
    EXPECT_EQ(QubitSet::ring_interval(8, -1, 2), QubitSet(8, {7, 0}));
    EXPECT_EQ(QubitSet::ring_interval(8, 3, 0), QubitSet::empty(8));
    EXPECT_THROW(QubitSet::ring_interval(8, 0, 9), std::invalid_argument);
}

TEST(QubitSet, ComplementAndIntersection) {
    QubitSet a(6, {0, 2, 4});
    EXPECT_EQ(a.complement(), QubitSet(6, {1, 3, 5}));
    EXPECT_EQ(a.complement().complement(), a);
    EXPECT_EQ(a.intersection_size(QubitSet(6, {2, 3, 4})), 2u);
    EXPECT_TRUE(QubitSet(6, {2}).is_subset_of(a));
    EXPECT_FALSE(QubitSet(6, {1}).is_subset_of(a));
    EXPECT_EQ(QubitSet::all(6).size(), 6u);
    EXPECT_EQ(a.mask(), (std::vector<bool>{true, false, true, false, true, false}));
}

}  // namespace
}  // namespace infoflow
