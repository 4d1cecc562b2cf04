// Copyright 2026 The Authors.
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

#include "gsemo/diagnostics/submodularity_ratio.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gsemo/core/errors.hpp"

namespace gsemo::diagnostics {
namespace {

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Values come from a full table when it is cheaper than direct calls.
class Values {
 public:
  Values(const objectives::SetFunction& f, std::uint64_t expectedCalls) : f_(f) {
    if (f.n() <= 20 && (std::uint64_t{1} << f.n()) <= expectedCalls) table_ = tabulate(f);
  }
  double operator()(const SubsetSolution& x) const {
    return table_.empty() ? f_.evaluate(x) : table_[x.mask()];
  }

 private:
  const objectives::SetFunction& f_;
  std::vector<double> table_;
};

double ratioWith(const Values& values, const SubsetSolution& u, std::size_t k) {
  const std::size_t n = u.n();
  std::vector<std::size_t> inU = u.indices();
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < n; ++i) {
    if (!u.contains(i)) outside.push_back(i);
  }
  const std::size_t maxS = std::min(k, outside.size());
  double best = std::numeric_limits<double>::infinity();

  std::vector<double> gains(outside.size());
  const std::uint64_t subsetsOfU = std::uint64_t{1} << inU.size();
  for (std::uint64_t lm = 0; lm < subsetsOfU; ++lm) {
    SubsetSolution l(n);
    for (std::size_t b = 0; b < inU.size(); ++b) {
      if ((lm >> b) & 1U) l.insert(inU[b]);
    }
    const double fl = values(l);
    for (std::size_t j = 0; j < outside.size(); ++j) gains[j] = values(l.with(outside[j])) - fl;

    // Grow S over outside[] in increasing position order.
    SubsetSolution s = l;
    std::function<void(std::size_t, std::size_t, double)> grow =
        [&](std::size_t from, std::size_t size, double numerator) {
          for (std::size_t j = from; j < outside.size(); ++j) {
            s.insert(outside[j]);
            const double num = numerator + gains[j];
            const double denom = values(s) - fl;
            if (denom > kRatioDenominatorCutoff) best = std::min(best, num / denom);
            if (size + 1 < maxS) grow(j + 1, size + 1, num);
            s.erase(outside[j]);
          }
        };
    if (maxS > 0) grow(0, 0, 0.0);
  }
  return best == std::numeric_limits<double>::infinity() ? 1.0 : best;
}

}  // namespace

std::uint64_t ratioCallEstimate(std::size_t n, std::size_t uSize, std::size_t k) {
  const std::size_t m = n - uSize;
  std::uint64_t perL = 1 + m;
  for (std::size_t s = 1; s <= std::min(k, m); ++s) perL += binomial(m, s);
  return (std::uint64_t{1} << uSize) * perL;
}

double submodularityRatio(const objectives::SetFunction& f, const SubsetSolution& u,
                          std::size_t k, std::uint64_t callBudget) {
  checkDomain(f, u);
  if (k < 1) throw GuardError("submodularity ratio needs k >= 1");
  if (u.size() >= 63) throw GuardError("submodularity ratio needs |U| < 63");
  const std::uint64_t calls = ratioCallEstimate(f.n(), u.size(), k);
  if (calls > callBudget) {
    throw GuardError("submodularity ratio enumeration needs " + std::to_string(calls) +
                     " oracle calls, budget is " + std::to_string(callBudget));
  }
  return ratioWith(Values(f, calls), u, k);
}

double gammaMin(const objectives::SetFunction& f, std::size_t k, std::uint64_t callBudget) {
  if (k < 1 || k > f.n()) throw GuardError("gammaMin needs 1 <= k <= n");
  const std::size_t n = f.n();
  requireAtMost(f, 62, "gammaMin");
  const std::uint64_t sets = binomial(n, k - 1);
  const std::uint64_t perSet = ratioCallEstimate(n, k - 1, k);
  if (sets != 0 && perSet > callBudget / sets) {
    throw GuardError("gammaMin enumeration exceeds the budget of " + std::to_string(callBudget) +
                     " oracle calls");
  }
  const Values values(f, sets * perSet);
  double best = std::numeric_limits<double>::infinity();
  // Walk all (k-1)-subsets in lexicographic order.
  std::vector<std::size_t> pick(k - 1);
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  for (;;) {
    best = std::min(best, ratioWith(values, SubsetSolution::fromIndices(n, pick), k));
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == n - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace gsemo::diagnostics
