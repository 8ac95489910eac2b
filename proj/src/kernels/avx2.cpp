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

#include <immintrin.h>

#include <cassert>

#include "dimernet/kernels.hpp"

// Two std::complex<double> per __m256d, laid out [re0, im0, re1, im1].

namespace dimernet::kernels {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

/// alpha * x for packed complex x, alpha given as broadcast real / imag parts.
inline __m256d cmul(__m256d alpha_re, __m256d alpha_im, __m256d x) {
  return _mm256_fmaddsub_pd(alpha_re, x, _mm256_mul_pd(alpha_im, swap_re_im(x)));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

/// lane0 - lane1 + lane2 - lane3
inline double halt(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx dot_conj_avx2(std::span<const cplx> a, std::span<const cplx> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  const double* pa = as_doubles(a.data());
  const double* pb = as_doubles(b.data());
  __m256d rr0 = _mm256_setzero_pd(), ri0 = _mm256_setzero_pd();
  __m256d rr1 = _mm256_setzero_pd(), ri1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * i);
    const __m256d va1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * i + 4);
    rr0 = _mm256_fmadd_pd(va0, vb0, rr0);
    ri0 = _mm256_fmadd_pd(va0, swap_re_im(vb0), ri0);
    rr1 = _mm256_fmadd_pd(va1, vb1, rr1);
    ri1 = _mm256_fmadd_pd(va1, swap_re_im(vb1), ri1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    rr0 = _mm256_fmadd_pd(va, vb, rr0);
    ri0 = _mm256_fmadd_pd(va, swap_re_im(vb), ri0);
  }
  double re = hsum(_mm256_add_pd(rr0, rr1));
  double im = halt(_mm256_add_pd(ri0, ri1));
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq_avx2(std::span<const cplx> a) {
  const std::size_t n = a.size();
  const double* pa = as_doubles(a.data());
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(pa + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * i);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

void axpy_avx2(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const double* px = as_doubles(x.data());
  double* py = as_doubles(y.data());
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    const __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, cmul(are, aim, vx)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(cplx alpha, std::span<cplx> x) {
  const std::size_t n = x.size();
  double* px = as_doubles(x.data());
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(px + 2 * i, cmul(are, aim, _mm256_loadu_pd(px + 2 * i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void gate3_avx2(const cplx* g, std::span<cplx> x0, std::span<cplx> x1, std::span<cplx> x2) {
  assert(x0.size() == x1.size() && x1.size() == x2.size());
  const std::size_t n = x0.size();
  double* p0 = as_doubles(x0.data());
  double* p1 = as_doubles(x1.data());
  double* p2 = as_doubles(x2.data());
  __m256d gre[9], gim[9];
  for (int k = 0; k < 9; ++k) {
    gre[k] = _mm256_set1_pd(g[k].real());
    gim[k] = _mm256_set1_pd(g[k].imag());
  }
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d a = _mm256_loadu_pd(p0 + 2 * i);
    const __m256d b = _mm256_loadu_pd(p1 + 2 * i);
    const __m256d c = _mm256_loadu_pd(p2 + 2 * i);
    __m256d r[3];
    for (int row = 0; row < 3; ++row) {
      r[row] = _mm256_add_pd(
          _mm256_add_pd(cmul(gre[3 * row], gim[3 * row], a), cmul(gre[3 * row + 1], gim[3 * row + 1], b)),
          cmul(gre[3 * row + 2], gim[3 * row + 2], c));
    }
    _mm256_storeu_pd(p0 + 2 * i, r[0]);
    _mm256_storeu_pd(p1 + 2 * i, r[1]);
    _mm256_storeu_pd(p2 + 2 * i, r[2]);
  }
  for (; i < n; ++i) {
    const cplx a = x0[i], b = x1[i], c = x2[i];
    x0[i] = g[0] * a + g[1] * b + g[2] * c;
    x1[i] = g[3] * a + g[4] * b + g[5] * c;
    x2[i] = g[6] * a + g[7] * b + g[8] * c;
  }
}

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{
    "avx2", &dot_conj_avx2, &norm_sq_avx2, &axpy_avx2, &scale_avx2, &gate3_avx2,
};

}  // namespace dimernet::kernels
