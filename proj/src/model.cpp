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

#include "sqz/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sqz {

namespace {
constexpr cplx kI{0.0, 1.0};
}

void SystemParams::validate() const {
  auto nonneg = [](double v, const char* name) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("SystemParams: ") + name +
                                  " must be finite and >= 0");
    }
  };
  nonneg(g_ac, "g_ac");
  nonneg(g_cm, "g_cm");
  nonneg(q, "q");
  nonneg(E1, "E1");
  nonneg(E2, "E2");
  nonneg(gamma10, "gamma10");
  nonneg(gamma21, "gamma21");
  nonneg(kappa_a, "kappa_a");
  nonneg(kappa_b, "kappa_b");
}

double SqueezedBathParams::N() const { return std::sinh(r) * std::sinh(r); }

cplx SqueezedBathParams::M() const {
  return -std::exp(kI * theta) * std::sinh(r) * std::cosh(r);
}

void SqueezedBathParams::validate() const {
  if (r < 0.0 || !std::isfinite(r) || !std::isfinite(theta)) {
    throw std::invalid_argument("SqueezedBathParams: need finite theta and r >= 0");
  }
}

SparseMat build_H2(const SystemParams& params, const HilbertSpec& spec) {
  params.validate();
  spec.validate();
  const SparseMat a = embed(annihilation_dense(spec.cavity_dim), Subsystem::Cavity, spec);
  const SparseMat b = embed(annihilation_dense(spec.mech_dim), Subsystem::Mech, spec);
  const SparseMat s21p = embed(atomic_ladder(2, 1), Subsystem::Atom, spec);
  const SparseMat ad = SparseMat(a.adjoint());
  const SparseMat bd = SparseMat(b.adjoint());

  SparseMat half = kI * params.J() * SparseMat(s21p * a * bd)
                 + kI * params.q * SparseMat(bd * bd)
                 - 2.0 * kI * params.K() * SparseMat(ad * a * bd);
  SparseMat h = half + SparseMat(half.adjoint());
  h.prune(cplx(0.0, 0.0));
  return h;
}

SparseMat build_H3(const SystemParams& params, const HilbertSpec& spec) {
  SystemParams p = params;
  p.q = 0.0;
  p.include_K = false;
  return build_H2(p, spec);
}

SparseMat build_HE(const SystemParams& params, const HilbertSpec& spec) {
  params.validate();
  spec.validate();
  const SparseMat s20p = embed(atomic_ladder(2, 0), Subsystem::Atom, spec);
  const SparseMat s10p = embed(atomic_ladder(1, 0), Subsystem::Atom, spec);
  SparseMat h = kI * params.E1 * SparseMat(SparseMat(s20p.adjoint()) - s20p)
              + kI * params.E2 * SparseMat(SparseMat(s10p.adjoint()) - s10p);
  h.prune(cplx(0.0, 0.0));
  return h;
}

std::vector<DissipationChannel> standard_channels(const SystemParams& params,
                                                  const HilbertSpec& spec) {
  params.validate();
  spec.validate();
  std::vector<DissipationChannel> ch;
  ch.push_back({embed(atomic_ladder(1, 2), Subsystem::Atom, spec), params.gamma21});
  ch.push_back({embed(atomic_ladder(0, 1), Subsystem::Atom, spec), params.gamma10});
  ch.push_back({embed(annihilation_dense(spec.cavity_dim), Subsystem::Cavity, spec),
                params.kappa_a});
  ch.push_back({embed(annihilation_dense(spec.mech_dim), Subsystem::Mech, spec),
                params.kappa_b});
  return ch;
}

std::vector<DissipationChannel> squeezed_channels(const SystemParams& params,
                                                  const SqueezedBathParams& bath,
                                                  const HilbertSpec& spec) {
  bath.validate();
  auto ch = standard_channels(params, spec);
  ch.back().kind = ChannelKind::SqueezedVacuum;
  ch.back().bath = bath;
  return ch;
}

}  // namespace sqz
