#include "gwp/membership.hpp"

#include <algorithm>
#include <cstdlib>

namespace gwp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(std::vector<std::int64_t>& y, std::int64_t q,
          const std::vector<std::int64_t>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

}  // namespace

bool SubgroupMembership::same_coset(WordView u, WordView v) const {
  Word probe(u.begin(), u.end());
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    probe.push_back(alphabet().inverse(*it));
  return contains(probe);
}

LatticeMembership::LatticeMembership(std::shared_ptr<const FreeAbelianOracle> oracle,
                                     const SubgroupSpec& sub)
    : oracle_(std::move(oracle)) {
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& g : sub.generators()) m.push_back(oracle_->exponents(g));

  const std::size_t n = oracle_->rank();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (best == m.size() || std::llabs(m[i][col]) < std::llabs(m[best][col]))
          best = i;
      }
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        axpy(m[i], m[i][col] / m[r][col], m[r]);
        if (m[i][col] != 0) cleared = false;
      }
      if (cleared) {
        if (m[r][col] < 0)
          for (auto& x : m[r]) x = -x;
        pivots_.push_back(col);
        rows_.push_back(m[r]);
        ++r;
        break;
      }
    }
  }
}

std::vector<std::int64_t> LatticeMembership::reduce(std::vector<std::int64_t> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    axpy(v, floor_div(v[p], rows_[i][p]), rows_[i]);
  }
  return v;
}

bool LatticeMembership::contains(WordView w) const {
  auto v = reduce(oracle_->exponents(w));
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<Word> LatticeMembership::coset_key(WordView w) const {
  return oracle_->from_exponents(reduce(oracle_->exponents(w)));
}

}  // namespace gwp
