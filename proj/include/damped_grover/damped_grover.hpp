// Copyright 2026 The damped_grover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "damped_grover/analytics.hpp"
#include "damped_grover/bloch.hpp"
#include "damped_grover/density_matrix.hpp"
#include "damped_grover/search_params.hpp"
#include "damped_grover/spectral.hpp"
#include "damped_grover/sweep.hpp"
#include "damped_grover/trajectory.hpp"
#include "damped_grover/verify.hpp"
