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

#include "adfraud/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "adfraud/model_json.hpp"
#include "adfraud/utg_json.hpp"
#include "json_support.hpp"

namespace adfraud {

namespace {

bool has_permission(const AppMeta& meta, std::string_view name) {
  return std::any_of(meta.permissions.begin(), meta.permissions.end(), [&](const std::string& p) {
    return p == name || p == "android.permission." + std::string(name);
  });
}

}  // namespace

bool prefilter(const AppMeta& meta) {
  if (!has_permission(meta, "INTERNET") || !has_permission(meta, "ACCESS_NETWORK_STATE")) {
    return false;
  }
  for (const auto& lib : meta.detected_ad_libs) {
    for (const auto& net : known_ad_networks()) {
      for (const auto& prefix : net.package_prefixes) {
        const std::string_view bare(prefix.data(), prefix.size() - 1);  // drop the dot
        if (lib == bare || lib.starts_with(prefix)) return true;
      }
    }
  }
  return false;
}

std::string format_percent(const Rational& r) {
  if (!r.defined()) return "n/a";
  // Hundredths of a percent, rounded half up.
  const std::int64_t v = (r.num * 20000 + r.den) / (2 * r.den);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld%%", static_cast<long long>(v / 100),
                static_cast<long long>(v % 100));
  return buf;
}

CorpusMetrics metrics_from_counts(int tp, int fp, int tn, int fn) {
  CorpusMetrics m;
  m.tp = tp;
  m.fp = fp;
  m.tn = tn;
  m.fn = fn;
  m.analyzed = tp + fp + tn + fn;
  return m;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::tp: return "tp";
    case Outcome::fp: return "fp";
    case Outcome::tn: return "tn";
    case Outcome::fn: return "fn";
  }
  return "?";
}

namespace {

void classify(AppOutcome& out) {
  const bool positive = !out.labels.empty();
  const bool predicted = out.report && out.report->fraudulent;
  out.outcome = positive ? (predicted ? Outcome::tp : Outcome::fn)
                         : (predicted ? Outcome::fp : Outcome::tn);
}

void attribute(AppOutcome& out, const AppModel& model) {
  if (out.outcome == Outcome::fp) {
    std::set<std::string> slots;
    for (const auto& f : model.faults) {
      if (f.kind == FaultKind::ad_load_failure) slots.insert(f.view_id + "_slot");
    }
    bool placeholder = false;
    for (const auto& f : out.report->findings) {
      for (const auto& v : f.view_ids) placeholder = placeholder || slots.count(v);
    }
    out.mechanisms.push_back(placeholder ? "trace_without_ad" : "unexplained");
  } else if (out.outcome == Outcome::fn) {
    std::set<std::string> fraud_screens;
    for (const auto& b : model.ad_behaviors) fraud_screens.insert(b.screens.begin(), b.screens.end());
    std::set<std::string> found;
    for (const auto& f : model.faults) {
      if (fraud_screens.count(f.screen)) found.insert(std::string(to_string(f.kind)));
    }
    out.mechanisms.assign(found.begin(), found.end());
    if (out.mechanisms.empty()) out.mechanisms.push_back("unexplained");
  }
}

}  // namespace

AppOutcome analyze_model(const AppModel& model, const std::vector<FraudType>& labels,
                         const CorpusOptions& opts) {
  AppOutcome out;
  out.package = model.meta.package;
  out.labels = labels;
  if (!prefilter(model.meta)) {
    out.prefiltered = true;
    classify(out);
    return out;
  }
  const AppModel run = opts.faults ? inject_faults(model, *opts.faults) : model;
  const auto explored = explore(run, opts.exploration);
  out.report = check_all(explored.graph, opts.ad_cfg, opts.rule_cfg);
  classify(out);
  attribute(out, run);
  return out;
}

namespace {

template <typename Job>
std::vector<AppOutcome> parallel(std::size_t n, int workers, Job job) {
  std::vector<AppOutcome> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = job(i);
  };
  const auto count = static_cast<std::size_t>(std::max(1, workers));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(count, n); ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<FraudType> labels_of(const AppMeta& meta) {
  return meta.label ? meta.label->fraud_types : std::vector<FraudType>{};
}

}  // namespace

CorpusMetrics compute_metrics(const std::vector<AppOutcome>& apps) {
  CorpusMetrics m;
  for (const auto& a : apps) {
    if (!a.outcome) {
      ++m.skipped;
      continue;
    }
    ++m.analyzed;
    if (a.prefiltered) ++m.prefiltered;
    switch (*a.outcome) {
      case Outcome::tp: ++m.tp; break;
      case Outcome::fp: ++m.fp; break;
      case Outcome::tn: ++m.tn; break;
      case Outcome::fn: ++m.fn; break;
    }
    for (auto t : a.labels) {
      const bool hit = a.report && std::any_of(a.report->findings.begin(), a.report->findings.end(),
                                               [&](const FraudFinding& f) { return f.type == t; });
      auto& c = m.per_type[t];
      (hit ? c.tp : c.fn)++;
    }
  }
  return m;
}

CorpusResult run_models(const std::vector<AppModel>& models, const CorpusOptions& opts) {
  CorpusResult r;
  r.apps = parallel(models.size(), opts.workers, [&](std::size_t i) {
    char name[32];
    std::snprintf(name, sizeof name, "app_%03zu.json", i);
    AppOutcome out;
    try {
      out = analyze_model(models[i], labels_of(models[i].meta), opts);
    } catch (const std::exception& e) {
      out.package = models[i].meta.package;
      out.labels = labels_of(models[i].meta);
      out.error = e.what();
    }
    out.file = name;
    return out;
  });
  r.metrics = compute_metrics(r.apps);
  return r;
}

CorpusResult run_corpus(const std::filesystem::path& dir, const CorpusOptions& opts) {
  struct Entry {
    std::string file;
    std::optional<std::vector<FraudType>> labels;
  };
  std::vector<Entry> entries;
  const auto manifest_path = dir / "manifest.json";
  if (std::filesystem::exists(manifest_path)) {
    for (const auto& a : deserialize_manifest(read_file(manifest_path)).apps) {
      entries.push_back({a.file, a.fraud_types});
    }
  } else if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".json") {
        entries.push_back({e.path().filename().string(), std::nullopt});
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.file < b.file; });
  } else {
    throw std::runtime_error("not a directory: " + dir.string());
  }

  CorpusResult r;
  r.apps = parallel(entries.size(), opts.workers, [&](std::size_t i) {
    const auto& entry = entries[i];
    AppOutcome out;
    out.file = entry.file;
    if (entry.labels) out.labels = *entry.labels;
    try {
      const auto text = read_file(dir / entry.file);
      const auto doc = json::parse_document(text);
      if (doc.is_object() && doc.contains("launch_screen")) {
        const auto model = deserialize_model(text);
        out = analyze_model(model, entry.labels ? *entry.labels : labels_of(model.meta), opts);
      } else {
        const auto graph = deserialize(text);
        out.package = graph.app.package;
        if (!entry.labels) out.labels = labels_of(graph.app);
        if (prefilter(graph.app)) {
          out.report = check_all(graph, opts.ad_cfg, opts.rule_cfg);
        } else {
          out.prefiltered = true;
        }
        classify(out);
        if (out.outcome == Outcome::fp || out.outcome == Outcome::fn) {
          out.mechanisms.push_back("unexplained");
        }
      }
    } catch (const std::exception& e) {
      out.error = e.what();
      out.outcome.reset();
      out.report.reset();
    }
    out.file = entry.file;
    return out;
  });
  r.metrics = compute_metrics(r.apps);
  return r;
}

namespace {

using json::OJson;

OJson rational_json(const Rational& r) {
  OJson j;
  j["num"] = r.num;
  j["den"] = r.den;
  j["percent"] = format_percent(r);
  return j;
}

std::string types_text(const std::vector<FraudType>& types) {
  if (types.empty()) return "-";
  std::string s;
  for (auto t : types) s += (s.empty() ? "" : ",") + std::string(to_string(t));
  return s;
}

}  // namespace

std::string emit_report(const CorpusResult& result, ReportFormat format) {
  const auto& m = result.metrics;
  if (format == ReportFormat::json) {
    OJson apps = OJson::array();
    for (const auto& a : result.apps) {
      OJson j;
      j["file"] = a.file;
      j["package"] = a.package;
      j["labels"] = OJson::array();
      for (auto t : a.labels) j["labels"].push_back(std::string(to_string(t)));
      j["prefiltered"] = a.prefiltered;
      j["outcome"] = a.outcome ? OJson(std::string(to_string(*a.outcome))) : OJson(nullptr);
      j["mechanisms"] = a.mechanisms;
      j["report"] = a.report ? OJson::parse(report_to_json(*a.report)) : OJson(nullptr);
      if (a.error) j["error"] = *a.error;
      apps.push_back(std::move(j));
    }
    OJson per_type = OJson::object();
    for (const auto& [t, c] : m.per_type) {
      per_type[std::string(to_string(t))] = OJson{{"tp", c.tp}, {"fn", c.fn}};
    }
    OJson metrics;
    metrics["analyzed"] = m.analyzed;
    metrics["skipped"] = m.skipped;
    metrics["prefiltered"] = m.prefiltered;
    metrics["tp"] = m.tp;
    metrics["fp"] = m.fp;
    metrics["tn"] = m.tn;
    metrics["fn"] = m.fn;
    metrics["precision"] = rational_json(m.precision());
    metrics["recall"] = rational_json(m.recall());
    metrics["per_type"] = std::move(per_type);
    OJson doc;
    doc["metrics"] = std::move(metrics);
    doc["apps"] = std::move(apps);
    return json::dump(doc);
  }

  std::ostringstream out;
  char line[160];
  out << m.analyzed << " analyzed, " << m.skipped << " skipped (" << m.prefiltered
      << " prefiltered out)\n\n";
  std::snprintf(line, sizeof line, "%-20s%16s%16s\n", "", "Labeled fraud", "Labeled clean");
  out << line;
  std::snprintf(line, sizeof line, "%-20s%16d%16d\n", "Detected fraud", m.tp, m.fp);
  out << line;
  std::snprintf(line, sizeof line, "%-20s%16d%16d\n\n", "Detected clean", m.fn, m.tn);
  out << line;
  const auto p = m.precision();
  const auto r = m.recall();
  out << "Precision: " << format_percent(p) << " (" << p.num << "/" << p.den << ")\n";
  out << "Recall:    " << format_percent(r) << " (" << r.num << "/" << r.den << ")\n";
  if (!m.per_type.empty()) {
    out << "\nPer type:\n";
    std::snprintf(line, sizeof line, "  %-14s%6s%6s\n", "type", "tp", "fn");
    out << line;
    for (const auto& [t, c] : m.per_type) {
      std::snprintf(line, sizeof line, "  %-14s%6d%6d\n", std::string(to_string(t)).c_str(),
                    c.tp, c.fn);
      out << line;
    }
  }
  bool header = false;
  for (const auto& a : result.apps) {
    const bool wrong = a.outcome == Outcome::fp || a.outcome == Outcome::fn;
    if (!wrong && !a.error) continue;
    if (!header) {
      out << "\nErrors:\n";
      header = true;
    }
    if (a.error) {
      out << "  " << a.file << ": skipped: " << *a.error << "\n";
    } else {
      std::string mech;
      for (const auto& s : a.mechanisms) mech += (mech.empty() ? "" : ",") + s;
      out << "  " << a.file << " " << a.package << ": " << to_string(*a.outcome)
          << " labels=" << types_text(a.labels) << " mechanism=" << mech << "\n";
    }
  }
  return out.str();
}

}  // namespace adfraud
