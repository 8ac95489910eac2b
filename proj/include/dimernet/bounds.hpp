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

#include <iosfwd>
#include <string>
#include <vector>

#include "dimernet/rdm.hpp"

namespace dimernet {

/// Number of clones M: a positive integer or the M -> infinity limit.
class CopyCount {
 public:
  static CopyCount finite(int m);
  static CopyCount infinite() { return CopyCount(0); }
  /// "4", "inf", "infinity"
  static CopyCount parse(const std::string& text);

  bool is_infinite() const { return m_ == 0; }
  int value() const;
  /// 1/M, exactly 0 at infinity.
  double inverse() const { return is_infinite() ? 0.0 : 1.0 / m_; }
  std::string to_string() const;

  bool operator==(const CopyCount&) const = default;

 private:
  explicit CopyCount(int m) : m_(m) {}
  int m_;
};

/// Local dimension of a node; the only value these bounds are defined for.
inline constexpr int kQutritDim = 3;

/// <psi_s| rho |psi_s> for rho in the two-node family, with
/// |psi_s> = (|12> - |21> + |00>)/sqrt(3).
double singlet_fraction_lower(const TwoNodeForm& form);

/// (F' d + 1)/(d + 1)
double tele_fidelity_lower(double f_prime, int d = kQutritDim);

/// (2M + d - 1)/(M (d + 1)); 2/(d + 1) at infinity.
double clone_fidelity(CopyCount m, int d = kQutritDim);

struct QBound {
  double q_max = 0.0;
  double unclamped = 0.0;
  bool clamped = false;
};

/// Largest q compatible with F_tele <= F_clo, clamped to [-1/3, 1].
QBound q_upper_bound(double p1p, double p3p, CopyCount m);

/// The exact root of tele_fidelity_lower(F'(q)) = clone_fidelity(M) in q,
/// unclamped. Differs from q_upper_bound by 2/(3 p3' M) for finite M.
double q_fidelity_crossing(double p1p, double p3p, CopyCount m);

struct BoundReport {
  double p1p = 0.0;
  double p3p = 0.0;
  CopyCount m = CopyCount::infinite();
  int d = kQutritDim;
  double f_prime = 0.0;       // at q = q_max
  double f_tele_lower = 0.0;  // at q = q_max
  double f_clo = 0.0;
  double q_max = 0.0;
  double ln_max = 0.0;
  bool clamped = false;
};

BoundReport bound_report(double p1p, double p3p, CopyCount m);

struct Figure1Row {
  double one_minus_p3 = 0.0;
  CopyCount m = CopyCount::infinite();
  double q_max = 0.0;
  bool clamped = false;
  double ln_max = 0.0;
};

/// "lo:hi:step", inclusive of hi when it lies on the grid.
std::vector<double> parse_grid(const std::string& spec);

/// One row per (p3', M), p3' outer loop in grid order, M inner in list order.
std::vector<Figure1Row> figure1_data(const std::vector<CopyCount>& m_list,
                                     const std::vector<double>& p3_grid, double p1p = 0.0);

/// Columns: one_minus_p3,m,q_max,clamped,ln_max
void write_figure1_csv(std::ostream& os, const std::vector<Figure1Row>& rows);

/// Partners of a reference node that are equidistant from it and whose
/// two-node reduced states share the same fitted (p1', p2', p3', q). The
/// class size is the clone count M of the telecloning argument.
struct PairClass {
  int distance = 0;
  std::vector<int> partners;
  TwoNodeForm form;

  CopyCount m() const { return CopyCount::finite(static_cast<int>(partners.size())); }
};

std::vector<PairClass> equivalent_pair_classes(const QutritState& state, const LatticeGraph& graph,
                                               int reference = 0, double tol = 1e-9);

struct BoundCheck {
  PairClass pair_class;
  bool applicable = false;  // false when q is undefined (p3' ~ 0)
  double q_max = 0.0;
  double f_tele_lower = 0.0;  // at the measured q
  double f_clo = 0.0;
  bool satisfied = true;  // q <= q_max + 1e-9 and F_tele <= F_clo + 1e-12
};

std::vector<BoundCheck> check_telecloning_bounds(const QutritState& state, const LatticeGraph& graph,
                                                 int reference = 0);

}  // namespace dimernet
