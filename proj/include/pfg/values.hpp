// Copyright 2026 The pfg Authors
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

#ifndef PFG_VALUES_HPP
#define PFG_VALUES_HPP

#include "pfg/game.hpp"

namespace pfg {

/// Shapley value by direct subset summation:
///   Sh_i(v) = sum_{S in N\{i}} s!(n-s-1)!/n! (v(S+i) - v(S)).
PayoffVector shapley(const TuGame& v);

/// Ewens-weighted expectation of w(S, .) over the outside partitions.
TuGame average_game(const TuxGame& w);

/// v*(S) = w_{-(N\S)}(S, {}), computed through restriction only.
TuGame auxiliary_game(const TuxGame& w);

/// Shapley value of the average game. DomainError on the empty game.
PayoffVector mpw(const TuxGame& w);

/// Shapley value of the TU game that keeps every outsider a singleton.
PayoffVector externality_free_value(const TuxGame& w);

SolutionConcept mpw_solution();
SolutionConcept externality_free_solution();
TuSolutionConcept shapley_solution();

}  // namespace pfg

#endif  // PFG_VALUES_HPP
