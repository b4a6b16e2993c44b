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

// Serialization of experiment artifacts. Reals are written with 17
// significant digits; lines end in LF.
//
// summary.json:
//   { "n": int, "family": str, "candidates": str, "samples": int,
//     "seed": uint64, "sign_flips": bool, "lhv_violation_prob": real,
//     "bounds": [ { "label": str, "value": real, "prob": real,
//                   "stderr": real }, ... ],
//     "mean": real, "min": real, "max": real }
//
// hist.csv:  bin_lo,bin_hi,count
// sweep.csv: theta,strategy_a,strategy_b,analytic_max,optimizer_max,
//            threshold,analytic_status,optimizer_status

#pragma once

#include <ostream>
#include <span>
#include <string>

#include "ghzbell/bounds.hpp"
#include "ghzbell/monte_carlo.hpp"
#include "ghzbell/restricted.hpp"

namespace ghzbell {

std::string format_real(double v);

void write_histogram_csv(std::ostream& os, const ExperimentResult& result);
void write_summary_json(std::ostream& os, const ExperimentResult& result);
void write_bounds_json(std::ostream& os, const BoundsTable& table);
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace ghzbell
