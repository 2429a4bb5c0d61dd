// Copyright 2026 The dfsgate Authors
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

#include "dfsgate/cnot.hpp"
#include "dfsgate/common.hpp"
#include "dfsgate/expm.hpp"
#include "dfsgate/hilbert.hpp"
#include "dfsgate/lambda_gate.hpp"
#include "dfsgate/metrics.hpp"
#include "dfsgate/propagator.hpp"
#include "dfsgate/raman_gate.hpp"
#include "dfsgate/regime.hpp"
#include "dfsgate/shelving.hpp"
