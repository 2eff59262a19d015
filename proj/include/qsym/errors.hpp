// Copyright 2026 The qsym Authors
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

#include <stdexcept>
#include <string>

namespace qsym {

/// Raised when a register would exceed the dense-representation ceilings.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

/// Raised for malformed or inconsistent experiment configurations.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when results cannot be written or read.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qsym
