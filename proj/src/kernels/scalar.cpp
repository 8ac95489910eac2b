// Copyright 2026 The dimernet Authors
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

#include <cassert>

#include "dimernet/kernels.hpp"

namespace dimernet::kernels {
namespace {

cplx dot_conj_scalar(std::span<const cplx> a, std::span<const cplx> b) {
  assert(a.size() == b.size());
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double norm_sq_scalar(std::span<const cplx> a) {
  double s = 0.0;
  for (const cplx& v : a) s += v.real() * v.real() + v.imag() * v.imag();
  return s;
}

void axpy_scalar(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale_scalar(cplx alpha, std::span<cplx> x) {
  for (cplx& v : x) v *= alpha;
}

void gate3_scalar(const cplx* g, std::span<cplx> x0, std::span<cplx> x1, std::span<cplx> x2) {
  assert(x0.size() == x1.size() && x1.size() == x2.size());
  for (std::size_t i = 0; i < x0.size(); ++i) {
    const cplx a = x0[i], b = x1[i], c = x2[i];
    x0[i] = g[0] * a + g[1] * b + g[2] * c;
    x1[i] = g[3] * a + g[4] * b + g[5] * c;
    x2[i] = g[6] * a + g[7] * b + g[8] * c;
  }
}

constexpr KernelTable kScalar{
    "scalar", &dot_conj_scalar, &norm_sq_scalar, &axpy_scalar, &scale_scalar, &gate3_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace dimernet::kernels
