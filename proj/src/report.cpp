// Copyright 2026 The ghzbell Authors
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

#include "ghzbell/report.hpp"

#include <cstdio>

namespace ghzbell {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Labels and names here are plain ASCII identifiers; no escaping needed.
std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

void write_histogram_csv(std::ostream& os, const ExperimentResult& result) {
  os << "bin_lo,bin_hi,count\n";
  for (const auto& b : result.histogram) {
    os << format_real(b.lo) << ',' << format_real(b.hi) << ',' << b.count << '\n';
  }
}

void write_summary_json(std::ostream& os, const ExperimentResult& r) {
  os << "{\n"
     << "  \"n\": " << r.config.n << ",\n"
     << "  \"family\": " << quoted(family_name(r.config.family)) << ",\n"
     << "  \"candidates\": " << quoted(r.config.candidates.to_string()) << ",\n"
     << "  \"samples\": " << r.config.samples << ",\n"
     << "  \"seed\": " << r.config.seed << ",\n"
     << "  \"sign_flips\": " << (r.config.sign_flips ? "true" : "false") << ",\n"
     << "  \"lhv_violation_prob\": " << format_real(r.lhv.probability) << ",\n"
     << "  \"bounds\": [";
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const auto& b = r.bounds[i];
    os << (i ? ",\n" : "\n") << "    {\"label\": " << quoted(b.label)
       << ", \"value\": " << format_real(b.value)
       << ", \"prob\": " << format_real(b.probability)
       << ", \"stderr\": " << format_real(b.std_error) << "}";
  }
  os << (r.bounds.empty() ? "],\n" : "\n  ],\n")
     << "  \"mean\": " << format_real(r.mean) << ",\n"
     << "  \"min\": " << format_real(r.min) << ",\n"
     << "  \"max\": " << format_real(r.max) << "\n"
     << "}\n";
}

void write_bounds_json(std::ostream& os, const BoundsTable& t) {
  os << "{\n"
     << "  \"n\": " << t.n << ",\n"
     << "  \"family\": " << quoted(family_name(t.family)) << ",\n"
     << "  \"lhv_bound\": " << format_real(t.lhv_bound) << ",\n"
     << "  \"thresholds\": [";
  for (std::size_t i = 0; i < t.thresholds.size(); ++i) {
    os << (i ? ",\n" : "\n") << "    {\"label\": " << quoted(t.thresholds[i].label)
       << ", \"value\": " << format_real(t.thresholds[i].value) << "}";
  }
  os << (t.thresholds.empty() ? "]\n" : "\n  ]\n") << "}\n";
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << "theta,strategy_a,strategy_b,analytic_max,optimizer_max,threshold,"
        "analytic_status,optimizer_status\n";
  for (const auto& r : rows) {
    os << format_real(r.theta) << ',' << format_real(r.strategy_a) << ','
       << format_real(r.strategy_b) << ',' << format_real(r.analytic_max) << ','
       << format_real(r.optimizer_max) << ',' << format_real(r.threshold) << ','
       << crossing_name(r.analytic_status) << ',' << crossing_name(r.optimizer_status)
       << '\n';
  }
}

}  // namespace ghzbell
