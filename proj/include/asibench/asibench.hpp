/**
 * Copyright 2026 The asibench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ASIBENCH_ASIBENCH_HPP
#define ASIBENCH_ASIBENCH_HPP

#include "asibench/corpus.hpp"
#include "asibench/error.hpp"
#include "asibench/harness.hpp"
#include "asibench/image.hpp"
#include "asibench/metrics.hpp"
#include "asibench/netpbm.hpp"
#include "asibench/perturb.hpp"
#include "asibench/random.hpp"
#include "asibench/registry.hpp"
#include "asibench/score_table.hpp"
#include "asibench/series.hpp"
#include "asibench/surface.hpp"
#include "asibench/synthetic.hpp"

#endif  // ASIBENCH_ASIBENCH_HPP
