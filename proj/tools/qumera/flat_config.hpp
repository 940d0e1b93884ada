// Copyright 2026 The qumera Authors
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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace qumera::cli {

// Flat "key = value" file; '#' starts a comment, blank lines are skipped.
// Keys are long option names without the leading dashes. Throws IoError on
// unreadable files and malformed lines (with the line number).
std::vector<std::pair<std::string, std::string>> read_flat_config(const std::filesystem::path& path);

}  // namespace qumera::cli
