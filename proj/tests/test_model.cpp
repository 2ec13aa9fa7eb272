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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>

#include "sqz/model.hpp"

using namespace sqz;

namespace {

constexpr cplx kI{0.0, 1.0};

int idx(const HilbertSpec& spec, int i, int c, int m) {
  return (i * spec.cavity_dim + c) * spec.mech_dim + m;
}

HilbertSpec small_spec() {
  HilbertSpec spec;
  spec.cavity_dim = 3;
  spec.mech_dim = 3;
  return spec;
}

}  // namespace

TEST_CASE("derived couplings J and K follow the parameter switches") {
  SystemParams p;
  p.g_ac = 100.0;
  p.g_cm = 0.01;
  p.q = 0.02;
  CHECK(p.J() == doctest::Approx(1.0));
  CHECK(p.K() == 0.0);  // correction disabled by default
  p.include_K = true;
  CHECK(p.K() == doctest::Approx(2e-4));
}

TEST_CASE("SystemParams rejects negative and non-finite entries") {
  SystemParams p;
  CHECK_NOTHROW(p.validate());
  p.kappa_a = -0.1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.kappa_a = 0.2;
  p.q = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("squeezed bath moments satisfy |M|^2 = N(N+1)") {
  for (double r : {0.0, 0.1, 0.3, 0.7, 1.5}) {
    for (double theta : {0.0, 1.0, M_PI}) {
      SqueezedBathParams bath;
      bath.r = r;
      bath.theta = theta;
      const double N = bath.N();
      CHECK(N == doctest::Approx(std::sinh(r) * std::sinh(r)).epsilon(1e-14));
      CHECK(std::abs(std::norm(bath.M()) - N * (N + 1.0)) < 1e-12);
    }
  }

  SqueezedBathParams pi_bath;
  pi_bath.r = 0.4;
  pi_bath.theta = M_PI;
  // At theta = pi the anomalous moment is real and positive.
  CHECK(pi_bath.M().real() == doctest::Approx(std::sinh(0.4) * std::cosh(0.4)).epsilon(1e-12));
  CHECK(std::abs(pi_bath.M().imag()) < 1e-12);

  SqueezedBathParams bad;
  bad.r = -0.2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("tripartite Hamiltonian is Hermitian and reduces to the exchange form at q=0") {
  const HilbertSpec spec = small_spec();
  SystemParams p;
  p.q = 0.015;
  p.include_K = true;

  const DenseMat h2 = DenseMat(build_H2(p, spec));
  CHECK((h2 - h2.adjoint()).cwiseAbs().maxCoeff() < 1e-13);

  SystemParams p0 = p;
  p0.q = 0.0;
  p0.include_K = false;
  CHECK(DenseMat(build_H2(p0, spec)).isApprox(DenseMat(build_H3(p, spec)), 1e-14));
}

TEST_CASE("mechanical pump block matches i q (bdag^2 - b^2) when couplings vanish") {
  const HilbertSpec spec = small_spec();
  SystemParams p;
  p.g_ac = 0.0;  // kills the exchange term
  p.q = 0.003;

  const DenseMat bd = DenseMat(embed(annihilation_dense(spec.mech_dim), Subsystem::Mech, spec)).adjoint();
  const DenseMat expected = kI * p.q * (bd * bd - (bd * bd).adjoint());
  CHECK(DenseMat(build_H2(p, spec)).isApprox(expected, 1e-14));
}

TEST_CASE("exchange term moves one excitation from cavity to mechanics while raising the atom") {
  const HilbertSpec spec = small_spec();
  SystemParams p;  // defaults give J = 1
  const DenseMat h3 = DenseMat(build_H3(p, spec));
  const cplx elem = h3(idx(spec, 2, 0, 1), idx(spec, 1, 1, 0));
  CHECK(std::abs(elem - kI * p.J()) < 1e-13);
  CHECK(std::abs(h3(idx(spec, 1, 1, 0), idx(spec, 2, 0, 1)) + kI * p.J()) < 1e-13);
}

TEST_CASE("drive Hamiltonian connects level 0 to levels 1 and 2") {
  const HilbertSpec spec = small_spec();
  SystemParams p;
  p.E1 = 7.0;
  p.E2 = 3.0;
  const DenseMat he = DenseMat(build_HE(p, spec));
  CHECK((he - he.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(std::abs(he(idx(spec, 0, 1, 2), idx(spec, 2, 1, 2)) - kI * p.E1) < 1e-13);
  CHECK(std::abs(he(idx(spec, 2, 1, 2), idx(spec, 0, 1, 2)) + kI * p.E1) < 1e-13);
  CHECK(std::abs(he(idx(spec, 0, 0, 0), idx(spec, 1, 0, 0)) - kI * p.E2) < 1e-13);
  // No direct 1 <-> 2 drive.
  CHECK(std::abs(he(idx(spec, 1, 0, 0), idx(spec, 2, 0, 0))) < 1e-15);
}

TEST_CASE("standard loss channels come in the documented order with the right rates") {
  const HilbertSpec spec = small_spec();
  SystemParams p;
  p.gamma21 = 0.5;
  const auto ch = standard_channels(p, spec);
  REQUIRE(ch.size() == 4);

  CHECK(ch[0].rate == doctest::Approx(p.gamma21));
  CHECK(ch[1].rate == doctest::Approx(p.gamma10));
  CHECK(ch[2].rate == doctest::Approx(p.kappa_a));
  CHECK(ch[3].rate == doctest::Approx(p.kappa_b));
  for (const auto& c : ch) {
    CHECK(c.kind == ChannelKind::Standard);
    CHECK(!c.bath.has_value());
  }

  // ch[1] lowers the atom 1 -> 0.
  const DenseMat op1 = DenseMat(ch[1].op);
  CHECK(std::abs(op1(idx(spec, 0, 2, 1), idx(spec, 1, 2, 1)) - cplx(1.0, 0.0)) < 1e-15);
  // ch[3] is the mechanical annihilator.
  const DenseMat op3 = DenseMat(ch[3].op);
  CHECK(std::abs(op3(idx(spec, 1, 1, 1), idx(spec, 1, 1, 2)) - cplx(std::sqrt(2.0), 0.0)) < 1e-15);
}

TEST_CASE("squeezed_channels retags only the mechanical channel") {
  const HilbertSpec spec = small_spec();
  SystemParams p;
  SqueezedBathParams bath;
  bath.r = 0.3;
  bath.theta = M_PI;
  const auto ch = squeezed_channels(p, bath, spec);
  REQUIRE(ch.size() == 4);
  CHECK(ch[0].kind == ChannelKind::Standard);
  CHECK(ch[1].kind == ChannelKind::Standard);
  CHECK(ch[2].kind == ChannelKind::Standard);
  CHECK(ch[3].kind == ChannelKind::SqueezedVacuum);
  REQUIRE(ch[3].bath.has_value());
  CHECK(ch[3].bath->r == doctest::Approx(0.3));
  CHECK(ch[3].bath->theta == doctest::Approx(M_PI));
  CHECK(ch[3].rate == doctest::Approx(p.kappa_b));
}
