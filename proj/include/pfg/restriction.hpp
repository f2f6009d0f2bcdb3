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

#ifndef PFG_RESTRICTION_HPP
#define PFG_RESTRICTION_HPP

#include "pfg/game.hpp"

namespace pfg {

/// Subgame without player i under the Ewens-compatible restriction: the
/// removed player stays alone or joins the block of any remaining outsider,
/// each with equal chance,
///
///   w_{-i}(S, pi) = (w(S, pi + {i}) + sum_{B in pi} |B| w(S, pi + i->B)) / (n - s).
///
/// Removing the last player yields the empty game.
TuxGame restrict_one(const TuxGame& w, PlayerId i);

/// Iterated restrict_one in ascending player order.
TuxGame restrict_set(const TuxGame& w, Coalition removed);

/// w_{-S}(R, rho) computed directly as the Ewens-weighted average of
/// w(R, tau) over all tau in Pi(N \ R) with tau_{-S} = rho. Independent of
/// restrict_one; the two must agree.
Rational restrict_direct(const TuxGame& w, Coalition removed, const EmbeddedCoalition& target);

/// Plain TU subgame without player i.
TuGame remove_from_tu(const TuGame& v, PlayerId i);
/// Plain TU subgame on `keep`.
TuGame restrict_tu(const TuGame& v, Coalition keep);

}  // namespace pfg

#endif  // PFG_RESTRICTION_HPP
