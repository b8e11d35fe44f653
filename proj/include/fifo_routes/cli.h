// Copyright 2026 The fifo-routes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIFO_ROUTES_CLI_H_
#define FIFO_ROUTES_CLI_H_

#include <ostream>

namespace fifo_routes {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kDataError = 2;
inline constexpr int kSolverRefusal = 3;
inline constexpr int kUsage = 64;
}  // namespace exit_code

// Entry point of the fifo-routes tool:
//   fifo-routes <ingest|solve|verify|compare|generate> [flags]
// Summaries go to `out`, diagnostics to `err`. Results are only written to
// the files named on the command line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            bool color = false);

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_CLI_H_
