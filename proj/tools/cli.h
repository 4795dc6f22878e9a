// Copyright 2026 The Emboot Authors.
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

#ifndef EMBOOT_TOOLS_CLI_H_
#define EMBOOT_TOOLS_CLI_H_

namespace emboot {

// Entry point of the emboot command-line tool. Returns the process exit
// status; diagnostics go to stderr.
int CliMain(int argc, char **argv);

}  // namespace emboot

#endif  // EMBOOT_TOOLS_CLI_H_
