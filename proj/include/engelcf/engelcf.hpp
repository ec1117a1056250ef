// Copyright 2026 The engelcf Authors
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

// Umbrella header: the whole library except the CLI front end.

#ifndef ENGELCF_ENGELCF_HPP_
#define ENGELCF_ENGELCF_HPP_

#include "engelcf/bigint.hpp"
#include "engelcf/cf.hpp"
#include "engelcf/decimal.hpp"
#include "engelcf/engel.hpp"
#include "engelcf/errors.hpp"
#include "engelcf/rational.hpp"
#include "engelcf/series.hpp"
#include "engelcf/zexpr.hpp"

#endif  // ENGELCF_ENGELCF_HPP_
