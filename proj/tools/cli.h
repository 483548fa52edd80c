// Copyright 2026 The qadvice Authors
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

#ifndef QADVICE_TOOLS_CLI_H
#define QADVICE_TOOLS_CLI_H

#include <iostream>

namespace qadvice {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_ASSERTION = 1;
inline constexpr int EXIT_USAGE = 2;
inline constexpr int EXIT_IO = 3;

/// Runs one `qadvice` command. Reports go to `out` unless --output names a file.
int run_cli(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr);

}  // namespace qadvice

#endif
