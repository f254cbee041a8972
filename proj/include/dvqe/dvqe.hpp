// Copyright 2026 The dvqe developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "dvqe/circuit.hpp"
#include "dvqe/error.hpp"
#include "dvqe/hamiltonian.hpp"
#include "dvqe/pipeline.hpp"
#include "dvqe/qubo.hpp"
#include "dvqe/rng.hpp"
#include "dvqe/sampler.hpp"
#include "dvqe/statevector.hpp"
#include "dvqe/telegate.hpp"
#include "dvqe/topology.hpp"
#include "dvqe/trainer.hpp"
#include "dvqe/warm_start.hpp"
