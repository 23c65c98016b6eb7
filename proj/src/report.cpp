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

#include <cstdio>
#include <sstream>

#include "adfraud/fraud.hpp"
#include "json_support.hpp"

namespace adfraud {

std::string report_to_json(const FraudReport& report) {
  using json::OJson;
  OJson findings = OJson::array();
  for (const auto& f : report.findings) {
    OJson ev;
    ev["text"] = f.evidence.text;
    for (const auto& [k, v] : f.evidence.numbers) ev[k] = v;
    OJson j;
    j["type"] = std::string(to_string(f.type));
    j["states"] = f.state_ids;
    j["views"] = f.view_ids;
    j["evidence"] = std::move(ev);
    findings.push_back(std::move(j));
  }
  OJson doc;
  doc["package"] = report.package;
  doc["fraudulent"] = report.fraudulent;
  doc["findings"] = std::move(findings);
  doc["config_hash"] = report.config_hash;
  return json::dump(doc);
}

FraudReport report_from_json(std::string_view text) {
  const auto doc = json::parse_document(text);
  const json::Field root(doc, "");
  root.expect_object({"package", "fraudulent", "findings", "config_hash"});
  FraudReport r;
  r.package = root.at("package").str();
  r.fraudulent = root.at("fraudulent").boolean();
  r.config_hash = root.at("config_hash").str();
  for (const auto& item : root.at("findings").items()) {
    item.expect_object({"type", "states", "views", "evidence"});
    FraudFinding f;
    f.type = json::parse_enum<FraudType>(item.at("type"), parse_fraud_type, "fraud type");
    f.state_ids = item.at("states").strings();
    f.view_ids = item.at("views").strings();
    const auto ev = item.at("evidence");
    if (!ev.value().is_object()) ev.fail("expected an object");
    for (const auto& [k, v] : ev.value().items()) {
      const json::Field field(v, ev.path() + "/" + k);
      if (k == "text") {
        f.evidence.text = field.str();
      } else {
        f.evidence.numbers[k] = field.number();
      }
    }
    f.rule_config_hash = r.config_hash;
    r.findings.push_back(std::move(f));
  }
  return r;
}

std::string render_text(const FraudReport& report) {
  std::ostringstream out;
  out << report.package << ": " << (report.fraudulent ? "FRAUDULENT" : "clean") << ", "
      << report.findings.size() << " finding(s)\n";
  for (const auto& f : report.findings) {
    std::string states, views;
    for (const auto& s : f.state_ids) states += (states.empty() ? "" : ",") + s;
    for (const auto& v : f.view_ids) views += (views.empty() ? "" : ",") + v;
    char head[64];
    std::snprintf(head, sizeof head, "  %-12s", std::string(to_string(f.type)).c_str());
    out << head << "states [" << states << "] views [" << views << "]\n";
    out << "               " << f.evidence.text;
    for (const auto& [k, v] : f.evidence.numbers) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      out << "; " << k << "=" << buf;
    }
    out << "\n";
  }
  out << "config " << report.config_hash << "\n";
  return out.str();
}

}  // namespace adfraud
