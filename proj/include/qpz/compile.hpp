// Copyright 2026 The qpz Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include "qpz/model.hpp"
#include "qpz/problems.hpp"

namespace qpz {

/// Preprocesses and builds the QUBO for any supported family.
///
/// For max-pieces the floor carries no weight; callers that need the
/// predicted minimum fill it from the oracle.
Compiled compile(const Problem& p);

}  // namespace qpz
