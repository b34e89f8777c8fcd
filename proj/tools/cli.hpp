// Copyright 2026 The ftcons Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTC_TOOLS_CLI_HPP
#define FTC_TOOLS_CLI_HPP

#include <ostream>

namespace ftc::cli {

/// Exit codes: 0 success, 1 negative mathematical result, 2 usage or input error.
enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftc::cli

#endif  // FTC_TOOLS_CLI_HPP
