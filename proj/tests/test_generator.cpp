// SPDX-License-Identifier: Apache-2.0
/*
Copyright (C) 2026 The adfraud Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include "adfraud/generator.hpp"
#include "adfraud/model_json.hpp"
#include "adfraud/simulator.hpp"

using namespace adfraud;

namespace {

std::map<FraudType, int> primary_counts(const std::vector<AppModel>& apps) {
  std::map<FraudType, int> out;
  for (const auto& a : apps) {
    if (a.meta.label && !a.meta.label->fraud_types.empty()) ++out[a.meta.label->fraud_types.front()];
  }
  return out;
}

}  // namespace

TEST(Generator, DefaultBenchmarkShape) {
  const auto apps = generate_benchmark(BenchmarkSpec{});
  ASSERT_EQ(apps.size(), 100u);
  int fraud = 0;
  int instances = 0;
  std::set<std::string> packages;
  for (const auto& a : apps) {
    ASSERT_TRUE(validate_model(a).empty()) << a.meta.package << ": " << validate_model(a).front();
    ASSERT_TRUE(a.meta.label);
    packages.insert(a.meta.package);
    if (!a.meta.label->fraud_types.empty()) ++fraud;
    instances += static_cast<int>(a.meta.label->fraud_types.size());
  }
  EXPECT_EQ(fraud, 50);
  EXPECT_EQ(instances, 54);
  EXPECT_EQ(packages.size(), 100u);
  const auto counts = primary_counts(apps);
  EXPECT_EQ(counts, default_distribution());
  for (auto t : kAllFraudTypes) EXPECT_GE(counts.at(t), 2) << to_string(t);
}

TEST(Generator, LabelsMatchScripts) {
  for (const auto& a : generate_benchmark(BenchmarkSpec{})) {
    std::set<FraudType> scripted;
    for (const auto& b : a.ad_behaviors) scripted.insert(b.type);
    const std::set<FraudType> labels(a.meta.label->fraud_types.begin(), a.meta.label->fraud_types.end());
    EXPECT_EQ(scripted, labels) << a.meta.package;
  }
}

TEST(Generator, SameSeedSameBytes) {
  BenchmarkSpec spec;
  spec.fraud = 9;
  spec.clean = 3;
  spec.dual = 1;
  const auto a = generate_benchmark(spec);
  const auto b = generate_benchmark(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(serialize_model(a[i]), serialize_model(b[i]));
  spec.seed = 2;
  EXPECT_NE(serialize_model(generate_benchmark(spec)[0]), serialize_model(a[0]));
}

TEST(Generator, CleanOnly) {
  BenchmarkSpec spec;
  spec.fraud = 0;
  spec.clean = 10;
  spec.dual = 0;
  const auto apps = generate_benchmark(spec);
  ASSERT_EQ(apps.size(), 10u);
  for (const auto& a : apps) {
    EXPECT_TRUE(a.meta.label->fraud_types.empty());
    EXPECT_TRUE(a.ad_behaviors.empty());
  }
}

TEST(Generator, InconsistentDistributionRejected) {
  BenchmarkSpec spec;
  spec.fraud = 10;
  spec.distribution = {{FraudType::hidden, 4}};
  EXPECT_THROW(generate_benchmark(spec), std::invalid_argument);
  spec.distribution = {{FraudType::hidden, 12}, {FraudType::size, -2}};
  EXPECT_THROW(generate_benchmark(spec), std::invalid_argument);
  spec.distribution = {{FraudType::hidden, 10}};
  spec.dual = 11;
  EXPECT_THROW(generate_benchmark(spec), std::invalid_argument);
  spec.dual = 0;
  EXPECT_EQ(generate_benchmark(spec).size(), 60u);
}

TEST(Generator, ExplorationSuite) {
  const auto suite = exploration_suite();
  ASSERT_EQ(suite.size(), 30u);
  int with_exit_ads = 0;
  for (const auto& m : suite) {
    EXPECT_TRUE(validate_model(m).empty());
    if (!exit_ad_screens(m).empty()) ++with_exit_ads;
  }
  EXPECT_GT(with_exit_ads, 0);
}
