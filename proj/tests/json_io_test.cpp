// Copyright 2026 The mumeb Authors
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

#include "mumeb/json_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mumeb/unitary.hpp"

using namespace mumeb;

TEST(json_io, matrix_round_trip) {
    const FieldPtr f = Field::create(3);
    const auto ring = GaloisRing::create(f);
    const ExcludedSubset family = family_triple(*f);
    for (const Mat2F &m : family.members()) {
        const ExactMatrix v = build_va(*ring, m);
        const Json j = matrix_to_json(v);
        EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), v);
    }
}

TEST(json_io, scalar_round_trip) {
    const ScaledGaussian x(3, -1, 3);
    EXPECT_EQ(scaled_gaussian_from_json(to_json(x)), x);
    EXPECT_EQ(to_json(Dyadic(3, 2)).dump(), "[3,2]");
}

TEST(json_io, subset_round_trip_and_validation) {
    const FieldPtr f = Field::create(2);
    const auto members = family_symmetric(*f).members();
    const Json j = subset_to_json(members);
    EXPECT_EQ(j.dump(), "[[1,0,0,1],[1,2,2,2],[1,3,3,3],[1,1,1,0],[0,1,1,1]]");
    EXPECT_EQ(subset_from_json(*f, j), members);
    EXPECT_EQ(subset_from_json(*f, Json{{"members", j}}), members);
    EXPECT_THROW(subset_from_json(*f, Json::parse("[[1,0,0]]")), Error);
    EXPECT_THROW(subset_from_json(*f, Json::parse("[[1,0,0,4]]")), Error);
    EXPECT_THROW(subset_from_json(*f, Json::parse("[[1,1,1,1]]")), Error);
    EXPECT_THROW(subset_from_json(*f, Json::parse("{\"x\": 1}")), std::exception);
}

TEST(json_io, report_is_deterministic) {
    const FieldPtr f = Field::create(2);
    const auto ring = GaloisRing::create(f);
    const auto members = family_triple(*f).members();
    const std::string a = report_to_json(*f, "triple", verify_mumeb_family(*ring, members, VerifyMode::Both, 1)).dump();
    const std::string b = report_to_json(*f, "triple", verify_mumeb_family(*ring, members, VerifyMode::Both, 3)).dump();
    EXPECT_EQ(a, b);
    const Json j = Json::parse(a);
    EXPECT_EQ(j["pairs_total"], 36);
    EXPECT_EQ(j["pairs_failed"], 0);
    EXPECT_EQ(j["ok"], true);
    EXPECT_TRUE(j["failures"].empty());
}

TEST(json_io, failure_witnesses_are_serialized) {
    const FieldPtr f = Field::create(2);
    const auto ring = GaloisRing::create(f);
    const Mat2F id = Mat2F::identity(*f);
    const Json j = report_to_json(*f, "custom", verify_mumeb_family(*ring, {id, id}, VerifyMode::Both));
    ASSERT_EQ(j["failures"].size(), 1u);
    EXPECT_TRUE(j["failures"][0].contains("shortcut_witness"));
    EXPECT_TRUE(j["failures"][0]["shortcut_witness"].contains("mod2"));
    EXPECT_TRUE(j["failures"][0].contains("bruteforce_witness"));
}

TEST(json_io, polynomial_table) {
    const auto path = std::filesystem::temp_directory_path() / "mumeb_poly_table_test.json";
    {
        std::ofstream out(path);
        out << R"({"3": [1, 0, 1, 1]})";
    }
    EXPECT_EQ(lookup_poly_table(path.string(), 3), std::optional<std::uint32_t>(0xD));
    EXPECT_EQ(lookup_poly_table(path.string(), 4), std::nullopt);
    EXPECT_THROW(lookup_poly_table((path.string() + ".missing"), 3), Error);
    std::filesystem::remove(path);
}

TEST(json_io, pretty_layout) {
    const FieldPtr f = Field::create(2);
    const auto ring = GaloisRing::create(f);
    const std::string text = pretty_matrix(build_va(*ring, Mat2F::from_indices(*f, {1, 1, 1, 0})));
    EXPECT_EQ(text,
              "1/2 *\n"
              "[  1 -1 -i -i ]\n"
              "[  1 -1  i  i ]\n"
              "[  1  1  i -i ]\n"
              "[  1  1 -i  i ]\n");
    EXPECT_EQ(pretty_matrix(exact_identity<std::int64_t>(2)), "[ 1 0 ]\n[ 0 1 ]\n");
}
