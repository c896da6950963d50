/*
 * Copyright 2026 The wittkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace wittkit::cli {

struct CommandResult {
  int status = 0;
  std::string out;  // the output document (empty on failure)
  std::string err;  // structured error document (empty on success)
};

/// Runs one command line (without the program name). Exit status 0 on
/// success, 1 on a domain error, 2 on a usage or parse error. When --out is
/// given the document is written there instead of being returned in `out`.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace wittkit::cli
