#include "zakspace/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "zakspace/error.hpp"

namespace zakspace {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorCode::ShapeMismatch, "group table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      fail(ErrorCode::ShapeMismatch, "group table row " + std::to_string(a) + " has " +
                                         std::to_string(table[a].size()) + " entries, expected " +
                                         std::to_string(n));
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        fail(ErrorCode::OutOfRange, "table entry (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") = " + std::to_string(v) +
                                        " is out of range");
      g.table_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) fail(ErrorCode::NoIdentity, "no element acts neutrally on both sides");
  g.identity_ = identity;

  g.inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
        g.inverses_[a] = b;
        break;
      }
    }
    if (g.inverses_[a] < 0)
      fail(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          fail(ErrorCode::NotAssociative, "(g*h)*k != g*(h*k) for (g,h,k) = (" +
                                              std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(c) + ")");
    }

  g.abelian_ = true;
  for (int a = 0; a < n && g.abelian_; ++a)
    for (int b = a + 1; b < n && g.abelian_; ++b) g.abelian_ = g.mul(a, b) == g.mul(b, a);
  return g;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> label(order_, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < order_; ++a) {
    if (label[a] >= 0) continue;
    std::set<int> cls;
    for (int g = 0; g < order_; ++g) cls.insert(mul(mul(g, a), inv(g)));
    const int id = static_cast<int>(classes.size());
    for (int c : cls) label[c] = id;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int p = g; p != identity_; p = mul(p, g)) ++k;
  return k;
}

bool FiniteGroup::is_subgroup(std::span<const int> elements) const {
  if (elements.empty()) return false;
  std::vector<char> in(order_, 0);
  for (int e : elements) {
    if (e < 0 || e >= order_) return false;
    in[e] = 1;
  }
  for (int a : elements) {
    if (!in[inv(a)]) return false;
    for (int b : elements)
      if (!in[mul(a, b)]) return false;
  }
  return true;
}

void FiniteGroup::check_subgroup(std::span<const int> elements) const {
  if (elements.empty()) fail(ErrorCode::NotSubgroup, "subgroup element set is empty");
  std::vector<char> in(order_, 0);
  for (int e : elements) {
    if (e < 0 || e >= order_)
      fail(ErrorCode::OutOfRange, "subgroup element " + std::to_string(e) + " out of range");
    in[e] = 1;
  }
  for (int a : elements) {
    if (!in[inv(a)])
      fail(ErrorCode::NotSubgroup, "inverse of " + std::to_string(a) + " missing from subgroup");
    for (int b : elements)
      if (!in[mul(a, b)])
        fail(ErrorCode::NotSubgroup, "product " + std::to_string(a) + "*" + std::to_string(b) +
                                         " missing from subgroup");
  }
}

bool FiniteGroup::is_normal(std::span<const int> subgroup) const {
  std::vector<char> in(order_, 0);
  for (int e : subgroup) in[e] = 1;
  for (int g = 0; g < order_; ++g)
    for (int h : subgroup)
      if (!in[mul(mul(g, h), inv(g))]) return false;
  return true;
}

void FiniteGroup::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != order_)
    fail(ErrorCode::SizeMismatch, "element name list does not match group order");
  names_ = std::move(names);
}

std::string FiniteGroup::name_of(int g) const {
  if (!names_.empty()) return names_[g];
  return std::to_string(g);
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group(int n) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  // (r^a s^f)(r^b s^h) = r^{a + (-1)^f b} s^{f+h}
  for (int x = 0; x < order; ++x) {
    const int f = x / n, a = x % n;
    for (int y = 0; y < order; ++y) {
      const int h = y / n, b = y % n;
      const int k = ((a + (f ? -b : b)) % n + n) % n;
      t[x][y] = ((f + h) % 2) * n + k;
    }
  }
  FiniteGroup g = FiniteGroup::from_table(t);
  std::vector<std::string> names(order);
  for (int x = 0; x < order; ++x) {
    const int f = x / n, a = x % n;
    names[x] = "r" + std::to_string(a) + (f ? "s" : "");
  }
  g.set_names(std::move(names));
  return g;
}

std::vector<std::vector<int>> symmetric_group_permutations(int n) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "symmetric group degree must be positive");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& perms) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  if (index.size() != perms.size())
    fail(ErrorCode::InvalidArgument, "permutation list contains duplicates");
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& p = perms[a];
      const auto& q = perms[b];
      if (p.size() != q.size()) fail(ErrorCode::SizeMismatch, "permutations of unequal degree");
      std::vector<int> pq(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) pq[i] = p[q[i]];
      auto it = index.find(pq);
      if (it == index.end())
        fail(ErrorCode::NotSubgroup, "permutation set not closed under composition");
      t[a][b] = it->second;
    }
  FiniteGroup g = FiniteGroup::from_table(t);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < perms[a].size(); ++i) os << (i ? "," : "") << perms[a][i];
    os << ']';
    names[a] = os.str();
  }
  g.set_names(std::move(names));
  return g;
}

FiniteGroup symmetric_group(int n) {
  return group_from_permutations(symmetric_group_permutations(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  FiniteGroup g = FiniteGroup::from_table(t);
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x)
    names[x] = "(" + a.name_of(x / nb) + "," + b.name_of(x % nb) + ")";
  g.set_names(std::move(names));
  return g;
}

std::vector<int> generated_subgroup(const FiniteGroup& group, std::span<const int> generators) {
  std::vector<char> in(group.order(), 0);
  std::vector<int> elems{group.identity()};
  in[group.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : generators) {
      const int p = group.mul(elems[i], s);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace zakspace
