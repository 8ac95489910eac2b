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

#pragma once

// Complex double-precision inner loops used by state construction, unitary
// application, partial traces and purity scans. Each kernel exists as a
// portable scalar reference and, on x86-64, an AVX2+FMA variant. The variant
// is picked once at first use from the CPU feature bits; setting
// DIMERNET_KERNELS=scalar forces the reference path.

#include <span>
#include <string_view>

#include "dimernet/common.hpp"

namespace dimernet::kernels {

struct KernelTable {
  std::string_view name;
  /// sum_i conj(a[i]) * b[i]
  cplx (*dot_conj)(std::span<const cplx> a, std::span<const cplx> b);
  /// sum_i |a[i]|^2
  double (*norm_sq)(std::span<const cplx> a);
  /// y[i] += alpha * x[i]
  void (*axpy)(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
  /// x[i] *= alpha
  void (*scale)(cplx alpha, std::span<cplx> x);
  /// In-place 3x3 gate on three equally long slices: (x0,x1,x2)[i] <- g * (x0,x1,x2)[i].
  /// g is row-major.
  void (*gate3)(const cplx* g, std::span<cplx> x0, std::span<cplx> x1, std::span<cplx> x2);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// The table selected for this process.
const KernelTable& active();

inline cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
  return active().dot_conj(a, b);
}
inline double norm_sq(std::span<const cplx> a) { return active().norm_sq(a); }
inline void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  active().axpy(alpha, x, y);
}
inline void scale(cplx alpha, std::span<cplx> x) { active().scale(alpha, x); }
inline void gate3(const cplx* g, std::span<cplx> x0, std::span<cplx> x1, std::span<cplx> x2) {
  active().gate3(g, x0, x1, x2);
}

}  // namespace dimernet::kernels
