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

#include "dimernet/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "dimernet/entanglement.hpp"

namespace dimernet {

CopyCount CopyCount::finite(int m) {
  if (m < 1) throw ContractError("copy count must be a positive integer");
  return CopyCount(m);
}

CopyCount CopyCount::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinite();
  int m = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ContractError("invalid copy count '" + text + "'");
  }
  return finite(m);
}

int CopyCount::value() const {
  if (is_infinite()) throw ContractError("infinite copy count has no integer value");
  return m_;
}

std::string CopyCount::to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }

double singlet_fraction_lower(const TwoNodeForm& form) {
  const double werner = form.q ? form.p3p * (3.0 * *form.q + 1.0) / 2.0 : 0.0;
  return form.p1p / 3.0 + werner / 3.0;
}

namespace {

void require_qutrit(int d) {
  if (d != kQutritDim) throw ContractError("bounds are defined for d = 3 only");
}

}  // namespace

double tele_fidelity_lower(double f_prime, int d) {
  require_qutrit(d);
  if (f_prime < -1e-12 || f_prime > 1.0 + 1e-12) throw ContractError("F' outside [0, 1]");
  return (f_prime * d + 1.0) / (d + 1.0);
}

double clone_fidelity(CopyCount m, int d) {
  require_qutrit(d);
  if (m.is_infinite()) return 2.0 / (d + 1.0);
  const double mm = m.value();
  return (2.0 * mm + (d - 1.0)) / (mm * (d + 1.0));
}

QBound q_upper_bound(double p1p, double p3p, CopyCount m) {
  if (!(p3p > 0.0)) throw ContractError("q bound undefined for p3' = 0");
  if (p1p < 0.0) throw ContractError("p1' must be non-negative");
  if (p1p + p3p > 1.0 + 1e-12) throw ContractError("p1' + p3' exceeds 1");
  QBound b;
  b.unclamped = (2.0 / p3p - 1.0) / 3.0 - (2.0 / (3.0 * p3p)) * (p1p - m.inverse());
  b.q_max = std::clamp(b.unclamped, -1.0 / 3.0, 1.0);
  b.clamped = b.q_max != b.unclamped;
  return b;
}

double q_fidelity_crossing(double p1p, double p3p, CopyCount m) {
  if (!(p3p > 0.0)) throw ContractError("q crossing undefined for p3' = 0");
  // (p1' + p3'(3q+1)/2 + 1)/4 = 1/2 + 1/(2M)
  return ((2.0 / p3p) * (1.0 + 2.0 * m.inverse() - p1p) - 1.0) / 3.0;
}

namespace {

double max_log_negativity(double p1p, double p3p, double q) {
  const double p2p = std::max(0.0, 1.0 - p1p - p3p);
  return log_negativity(DensityMatrix{two_node_matrix(p1p, p2p, p3p, q), {0, 1}});
}

}  // namespace

BoundReport bound_report(double p1p, double p3p, CopyCount m) {
  const QBound qb = q_upper_bound(p1p, p3p, m);
  BoundReport r;
  r.p1p = p1p;
  r.p3p = p3p;
  r.m = m;
  r.q_max = qb.q_max;
  r.clamped = qb.clamped;
  r.f_prime = singlet_fraction_lower(TwoNodeForm{p1p, 1.0 - p1p - p3p, p3p, qb.q_max, 0.0});
  r.f_tele_lower = tele_fidelity_lower(std::clamp(r.f_prime, 0.0, 1.0));
  r.f_clo = clone_fidelity(m);
  r.ln_max = max_log_negativity(p1p, p3p, qb.q_max);
  return r;
}

std::vector<double> parse_grid(const std::string& spec) {
  double parts[3];
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t end = k < 2 ? spec.find(':', start) : spec.size();
    if (end == std::string::npos) throw ContractError("grid must look like lo:hi:step");
    const std::string token = spec.substr(start, end - start);
    char* stop = nullptr;
    parts[k] = std::strtod(token.c_str(), &stop);
    if (token.empty() || *stop != '\0') throw ContractError("invalid grid number '" + token + "'");
    start = end + 1;
  }
  const double lo = parts[0], hi = parts[1], step = parts[2];
  if (!(step > 0.0) || hi < lo) throw ContractError("grid needs lo <= hi and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) grid.push_back(std::min(hi, lo + i * step));
  if (std::abs(grid.back() - hi) < 1e-9 * std::max(1.0, std::abs(hi))) grid.back() = hi;
  return grid;
}

std::vector<Figure1Row> figure1_data(const std::vector<CopyCount>& m_list,
                                     const std::vector<double>& p3_grid, double p1p) {
  if (m_list.empty() || p3_grid.empty()) throw ContractError("figure data needs M values and a grid");
  for (double p3 : p3_grid) {
    if (!(p3 > 0.0) || p3 > 1.0) throw ContractError("p3' grid must lie within (0, 1]");
    if (p1p + p3 > 1.0 + 1e-12) throw ContractError("p1' + p3' exceeds 1 on the grid");
  }
  std::vector<Figure1Row> rows;
  rows.reserve(m_list.size() * p3_grid.size());
  for (double p3 : p3_grid) {
    for (const CopyCount& m : m_list) {
      const QBound qb = q_upper_bound(p1p, p3, m);
      rows.push_back({1.0 - p3, m, qb.q_max, qb.clamped, max_log_negativity(p1p, p3, qb.q_max)});
    }
  }
  return rows;
}

void write_figure1_csv(std::ostream& os, const std::vector<Figure1Row>& rows) {
  os << "one_minus_p3,m,q_max,clamped,ln_max\n";
  char buf[128];
  for (const Figure1Row& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%s,%.17g,%d,%.17g\n", r.one_minus_p3,
                  r.m.to_string().c_str(), r.q_max, r.clamped ? 1 : 0, r.ln_max);
    os << buf;
  }
}

namespace {

bool same_form(const TwoNodeForm& a, const TwoNodeForm& b, double tol) {
  if (a.q.has_value() != b.q.has_value()) return false;
  if (a.q && std::abs(*a.q - *b.q) > tol) return false;
  return std::abs(a.p1p - b.p1p) <= tol && std::abs(a.p2p - b.p2p) <= tol &&
         std::abs(a.p3p - b.p3p) <= tol;
}

}  // namespace

std::vector<PairClass> equivalent_pair_classes(const QutritState& state, const LatticeGraph& graph,
                                               int reference, double tol) {
  if (state.node_count() != graph.node_count()) throw ContractError("state and graph sizes differ");
  std::vector<PairClass> classes;
  for (const auto& [dist, nodes] : graph.distance_classes(reference)) {
    const std::size_t first = classes.size();
    for (int b : nodes) {
      const TwoNodeForm f = fit_two(partial_trace(state, {reference, b}));
      auto it = std::find_if(classes.begin() + first, classes.end(),
                             [&](const PairClass& c) { return same_form(c.form, f, tol); });
      if (it != classes.end()) {
        it->partners.push_back(b);
      } else {
        classes.push_back({dist, {b}, f});
      }
    }
  }
  return classes;
}

std::vector<BoundCheck> check_telecloning_bounds(const QutritState& state, const LatticeGraph& graph,
                                                 int reference) {
  std::vector<BoundCheck> out;
  for (PairClass& c : equivalent_pair_classes(state, graph, reference)) {
    BoundCheck check;
    check.f_clo = clone_fidelity(c.m());
    if (c.form.q && c.form.p3p > 0.0) {
      check.applicable = true;
      check.q_max = q_upper_bound(std::max(0.0, c.form.p1p), c.form.p3p, c.m()).q_max;
      check.f_tele_lower = tele_fidelity_lower(std::clamp(singlet_fraction_lower(c.form), 0.0, 1.0));
      check.satisfied = *c.form.q <= check.q_max + 1e-9 && check.f_tele_lower <= check.f_clo + 1e-12;
    }
    check.pair_class = std::move(c);
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace dimernet
