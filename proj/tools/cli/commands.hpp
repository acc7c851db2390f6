// Copyright 2026 The radcap Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/channel_spec.hpp"
#include "radcap/capacity.hpp"
#include "radcap/oracle.hpp"

namespace radcap::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitParseError = 2,
    kExitInvalidRequest = 3,
};

/// Fixed key set; fields that do not apply are null.
nlohmann::ordered_json report_to_json(const CapacityReport& report);
std::string report_to_table(const CapacityReport& report);
/// Keys of report_to_json that need a quantum channel.
const std::vector<std::string>& channel_only_fields();

struct CheckResult {
    enum class Status { kPass, kFail, kSkipped };
    std::string name;
    Status status = Status::kSkipped;
    double deviation = 0.0;
    std::string detail;
};

/// Runs every oracle and action check that applies to the channel.
std::vector<CheckResult> run_verification(const MultiplierChannel& ch, const OptimizerConfig& config);

enum class SweepFamily { kDephasing, kOu };

struct SweepRow {
    double t = 0.0;
    double c_ea = 0.0;
    double hcb_min_tr = 0.0;
    double q1_lb = 0.0;
    double hmin_numeric = 0.0;
};

/// Rows in grid order; rows are evaluated concurrently.
std::vector<SweepRow> sweep(SweepFamily family, int n, const std::vector<double>& grid,
                            bool with_numeric, const OptimizerConfig& config);
/// Header `t,c_ea,hcb_min_tr,q1_lb[,hmin_numeric]`, 12 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_numeric);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radcap::cli
