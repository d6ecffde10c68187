// Copyright 2026 The nqueens-sim Authors
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

#include "nqueens/analysis.hpp"
#include "nqueens/basis_label.hpp"
#include "nqueens/board.hpp"
#include "nqueens/circuit.hpp"
#include "nqueens/errors.hpp"
#include "nqueens/qasm.hpp"
#include "nqueens/sim.hpp"
