// Copyright 2026 The squeezetransfer Authors
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

#ifndef SQZ_MODEL_HPP
#define SQZ_MODEL_HPP

#include <optional>
#include <vector>

#include "sqz/operator_algebra.hpp"

namespace sqz {

// All quantities are dimensionless: rates and couplings in units of the
// mechanical frequency, which is 1 throughout.
struct SystemParams {
  double g_ac = 100.0;   // atom-cavity coupling
  double g_cm = 0.01;    // optomechanical coupling
  double q = 0.0;        // coherent squeezing-pump amplitude
  double E1 = 25.0;      // drive on the 0 <-> 2 transition
  double E2 = 25.0;      // drive on the 0 <-> 1 transition
  double gamma10 = 20.0; // spontaneous emission 1 -> 0
  double gamma21 = 0.0;  // spontaneous emission 2 -> 1
  double kappa_a = 0.2;  // cavity decay
  double kappa_b = 0.002; // mechanical decay
  bool include_K = false; // keep the small a^dag a b^dag correction term

  double J() const { return g_ac * g_cm; }
  double K() const { return include_K ? q * g_cm : 0.0; }
  void validate() const;  // throws std::invalid_argument on negative rates
};

// Squeezed mechanical reservoir with N = sinh^2(r) effective quanta and
// anomalous correlation M = -exp(i theta) sinh(r) cosh(r).
struct SqueezedBathParams {
  double r = 0.0;
  double theta = 0.0;

  double N() const;
  cplx M() const;
  void validate() const;
};

enum class ChannelKind { Standard, SqueezedVacuum };

struct DissipationChannel {
  SparseMat op;   // collapse operator on the composite space
  double rate;    // prefactor kappa in (kappa/2) L[op]
  ChannelKind kind = ChannelKind::Standard;
  std::optional<SqueezedBathParams> bath;  // set iff kind == SqueezedVacuum
};

// Tripartite interaction i J s21+ a b^dag + i q b^dag^2 - 2 i K a^dag a b^dag + h.c.
SparseMat build_H2(const SystemParams& params, const HilbertSpec& spec);

// Same with the mechanical pump removed (q = K = 0): i J (s21+ a b^dag - s21- a^dag b).
SparseMat build_H3(const SystemParams& params, const HilbertSpec& spec);

// Atomic drives i E1 (s20- - s20+) + i E2 (s10- - s10+).
SparseMat build_HE(const SystemParams& params, const HilbertSpec& spec);

// The four loss channels (s21, gamma21), (s10, gamma10), (a, kappa_a), (b, kappa_b).
std::vector<DissipationChannel> standard_channels(const SystemParams& params,
                                                  const HilbertSpec& spec);

// Same, but the mechanical channel couples to the squeezed reservoir.
std::vector<DissipationChannel> squeezed_channels(const SystemParams& params,
                                                  const SqueezedBathParams& bath,
                                                  const HilbertSpec& spec);

}  // namespace sqz

#endif  // SQZ_MODEL_HPP
