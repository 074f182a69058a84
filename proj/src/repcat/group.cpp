#include "frobcat/repcat/group.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "frobcat/error.hpp"

namespace frobcat {
namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

Group::Group(CayleyTable table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw MalformedInput("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw MalformedInput("group table is not square");
    for (auto x : row) {
      if (x >= n) throw MalformedInput("group table entry out of range");
    }
  }
  identity_ = kNone;
  for (std::size_t e = 0; e < n && identity_ == kNone; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ == kNone) throw MalformedInput("group table has no identity");
  inverse_.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == kNone) {
      throw MalformedInput("group element " + std::to_string(a) + " has no inverse");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw MalformedInput("group table is not associative");
        }
}

Group Group::trivial() { return Group(CayleyTable{{0}}); }

Group Group::cyclic(std::size_t n) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Group(std::move(t));
}

Group Group::product(const Group& left, const Group& right) {
  const std::size_t nl = left.order(), nr = right.order();
  CayleyTable t(nl * nr, std::vector<std::size_t>(nl * nr));
  for (std::size_t a = 0; a < nl * nr; ++a)
    for (std::size_t b = 0; b < nl * nr; ++b)
      t[a][b] = left.mul(a / nr, b / nr) * nr + right.mul(a % nr, b % nr);
  return Group(std::move(t));
}

Group Group::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  CayleyTable t(perms.size(), std::vector<std::size_t>(perms.size()));
  std::vector<std::size_t> comp(n);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      // (a·b)(i) = a(b(i))
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(comp);
    }
  }
  return Group(std::move(t));
}

bool Group::is_central(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b) {
    if (mul(a, b) != mul(b, a)) return false;
  }
  return true;
}

bool Group::is_subgroup(const std::vector<std::size_t>& elements) const {
  std::set<std::size_t> s(elements.begin(), elements.end());
  if (s.size() != elements.size() || !s.count(identity_)) return false;
  for (auto a : s) {
    if (a >= order()) return false;
    for (auto b : s) {
      if (!s.count(mul(a, b))) return false;
    }
  }
  return true;
}

std::vector<std::size_t> Group::generated_subgroup(const std::vector<std::size_t>& generators) const {
  std::set<std::size_t> s{identity_};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> current(s.begin(), s.end());
    for (auto a : current) {
      for (auto g : generators) {
        if (g >= order()) throw MalformedInput("generator out of range");
        if (s.insert(mul(a, g)).second) grew = true;
      }
    }
  }
  return {s.begin(), s.end()};
}

Group Group::subgroup(const std::vector<std::size_t>& elements) const {
  if (!is_subgroup(elements)) throw MalformedInput("element list is not a subgroup");
  std::vector<std::size_t> local(order(), kNone);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = i;
  CayleyTable t(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) t[i][j] = local[mul(elements[i], elements[j])];
  return Group(std::move(t));
}

CosetDecomposition::CosetDecomposition(const Group& group, std::vector<std::size_t> embedding)
    : group_(group), embedding_(std::move(embedding)) {
  if (!group.is_subgroup(embedding_)) throw MalformedInput("embedding is not onto a subgroup");
  sub_index_of_.assign(group.order(), kNone);
  for (std::size_t i = 0; i < embedding_.size(); ++i) sub_index_of_[embedding_[i]] = i;
  coset_of_.assign(group.order(), kNone);
  // Identity first, then the smallest uncovered element.
  std::vector<std::size_t> candidates{group.identity()};
  for (std::size_t g = 0; g < group.order(); ++g) candidates.push_back(g);
  for (auto g : candidates) {
    if (coset_of_[g] != kNone) continue;
    const std::size_t c = reps_.size();
    reps_.push_back(g);
    for (auto k : embedding_) coset_of_[group.mul(g, k)] = c;
  }
}

std::pair<std::size_t, std::size_t> CosetDecomposition::act(std::size_t g, std::size_t c) const {
  const std::size_t x = group_.mul(g, reps_[c]);
  const std::size_t c2 = coset_of_[x];
  const std::size_t k = group_.mul(group_.inverse(reps_[c2]), x);
  return {c2, sub_index_of_[k]};
}

}  // namespace frobcat
