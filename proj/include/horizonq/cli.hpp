// Copyright 2026 The horizonq developers
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

#pragma once

#include <string>
#include <vector>

namespace horizonq::cli {

/// Runs one CLI invocation. `args` holds the command-line arguments without
/// the program name, in natural order. Returns the process exit code:
/// 0 success, 2 usage error, 3 numeric/contract error, 4 I/O error.
int dispatch(std::vector<std::string> args);

}  // namespace horizonq::cli
