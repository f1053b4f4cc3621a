// Copyright 2026 The noon-lab developers.
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

#include <stdexcept>
#include <string>

namespace noonlab {

/// Base class for all errors raised by the library.
class noon_error : public std::runtime_error {
  public:
    explicit noon_error(const std::string& what) : std::runtime_error(what) {}
};

/// Mode-count or mode-index mismatch between states/operations.
class dimension_error : public noon_error {
  public:
    using noon_error::noon_error;
};

/// A construction would exceed the global photon cap.
class capacity_error : public noon_error {
  public:
    using noon_error::noon_error;
};

/// Invalid parameter value (negative loss, equal beam-splitter modes, ...).
class parameter_error : public noon_error {
  public:
    using noon_error::noon_error;
};

/// Operation on a state with zero norm.
class undefined_state_error : public noon_error {
  public:
    using noon_error::noon_error;
};

/// Phase-sensitivity evaluation at a point with vanishing slope.
class singular_point_error : public noon_error {
  public:
    using noon_error::noon_error;
};

/// Degenerate input data: flat objective, zero reference amplitude, ...
class degenerate_error : public noon_error {
  public:
    using noon_error::noon_error;
};

/// Operation applied to data it is not defined for; the message names the
/// operation to use instead.
class contract_error : public noon_error {
  public:
    using noon_error::noon_error;
};

}  // namespace noonlab
