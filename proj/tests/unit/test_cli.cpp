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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "wittkit/io.hpp"

namespace fs = std::filesystem;
using wittkit::cli::run_command;
using wittkit::io::Json;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Runs with the golden directory as working directory so that input paths
/// in the manifest stay relative.
struct InGoldenDir {
  fs::path saved = fs::current_path();
  InGoldenDir() { fs::current_path(WITTKIT_GOLDEN_DIR); }
  ~InGoldenDir() { fs::current_path(saved); }
};

}  // namespace

TEST_CASE("golden command outputs") {
  InGoldenDir cwd;
  const bool update = std::getenv("WITTKIT_UPDATE_GOLDEN") != nullptr;
  const Json cases = wittkit::io::parse_json(slurp("cases.json"));
  REQUIRE(cases.size() > 0);
  for (const auto& c : cases) {
    const std::string name = c.at("name").get<std::string>();
    CAPTURE(name);
    const auto args = c.at("args").get<std::vector<std::string>>();
    const auto result = run_command(args);
    CHECK(result.status == c.at("status").get<int>());
    const fs::path expected = fs::path("expected") / (name + ".out");
    if (result.status == 0) {
      CHECK(result.err.empty());
      if (update) std::ofstream(expected, std::ios::binary) << result.out;
      REQUIRE(fs::exists(expected));
      CHECK(result.out == slurp(expected));
      // Determinism: a second run is byte-identical.
      CHECK(run_command(args).out == result.out);
    } else {
      CHECK(result.out.empty());
      const Json err = wittkit::io::parse_json(result.err);
      CHECK(err.at("error").at("code") == c.at("code"));
      CHECK(err.at("error").at("message").is_string());
    }
  }
}

TEST_CASE("census output is identical across seeds") {
  InGoldenDir cwd;
  const std::vector<std::string> base{"census", "--ring", "inputs/mod3.json", "--object", "alt", "--n", "4"};
  const auto a = run_command(base);
  auto seeded = base;
  seeded.insert(seeded.end(), {"--seed", "4242"});
  const auto b = run_command(seeded);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("--out writes the document to a file") {
  InGoldenDir cwd;
  const fs::path tmp = fs::temp_directory_path() / "wittkit_cli_out_test.json";
  fs::remove(tmp);
  const auto r = run_command({"pf", "--matrix", "inputs/psi4.json", "--out", tmp.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(slurp(tmp) == slurp("expected/pf_psi4.out"));
  fs::remove(tmp);
}

TEST_CASE("help exits cleanly") {
  const auto r = run_command({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("census") != std::string::npos);
}
