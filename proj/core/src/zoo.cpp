#include "tqft/zoo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "tqft/errors.hpp"

namespace tqft {

GroupTable::GroupTable(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw InputError("group must be non-empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) throw InputError("group table entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("group table has no identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] < 0) throw InputError("group table element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InputError("group table is not associative");
        }
      }
}

bool GroupTable::abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<int>> classes;
  auto add_class = [&](int x) {
    std::vector<int> cls;
    for (int h = 0; h < g.order(); ++h) {
      int y = g.mul(g.mul(h, x), g.inv(h));
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  };
  add_class(g.identity());
  for (int x = 0; x < g.order(); ++x) {
    if (!seen[x]) add_class(x);
  }
  return classes;
}

namespace {

GroupTable cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable("Z/" + std::to_string(n), std::move(t));
}

// Elements r^a s^b encoded as a + n*b; s r s = r^{-1}.
GroupTable dihedral(int n) {
  if (n < 1) throw InputError("dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int a = x % n, b = x / n, c = y % n, d = y / n;
      int rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  return GroupTable("D" + std::to_string(n), std::move(t));
}

GroupTable symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      std::array<int, 3> q{};
      for (int i = 0; i < 3; ++i) q[i] = perms[x][perms[y][i]];
      t[x][y] = static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    }
  return GroupTable("S3", std::move(t));
}

int parse_positive(std::string_view s, std::string_view context) {
  int v = 0;
  if (s.empty() || s.size() > 6) throw InputError("bad size in '" + std::string(context) + "'");
  for (char c : s) {
    if (c < '0' || c > '9') throw InputError("bad size in '" + std::string(context) + "'");
    v = v * 10 + (c - '0');
  }
  if (v < 1) throw InputError("size must be positive in '" + std::string(context) + "'");
  return v;
}

bool strip(std::string_view& s, std::string_view prefix, std::string_view suffix) {
  if (s.size() < prefix.size() + suffix.size() || s.substr(0, prefix.size()) != prefix ||
      s.substr(s.size() - suffix.size()) != suffix) {
    return false;
  }
  s = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
  return true;
}

std::vector<std::string> element_names(const GroupTable& g) {
  std::vector<std::string> names;
  for (int x = 0; x < g.order(); ++x) names.push_back(x == g.identity() ? "e" : "g" + std::to_string(x));
  return names;
}

}  // namespace

GroupTable preset_group(std::string_view name) {
  std::string_view s = name;
  if (s == "S3") return symmetric3();
  if (strip(s, "Z/", "") || strip(s, "cyclic(", ")")) return cyclic(parse_positive(s, name));
  s = name;
  if (strip(s, "dihedral(", ")") || strip(s, "D", "")) return dihedral(parse_positive(s, name));
  throw InputError("unknown group preset '" + std::string(name) + "'");
}

FrobeniusAlgebra semisimple(int n) {
  if (n < 1) throw InputError("semisimple algebra needs n >= 1");
  std::vector<std::string> basis;
  for (int i = 0; i < n; ++i) basis.push_back("p" + std::to_string(i + 1));
  std::vector<Scalar> mult(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) mult[(static_cast<size_t>(i) * n + i) * n + i] = 1;
  return FrobeniusAlgebra(std::move(basis), std::move(mult), Vector(n, Scalar(1)), true);
}

FrobeniusAlgebra matrix_algebra(int n) {
  if (n < 1) throw InputError("matrix algebra needs n >= 1");
  const int r = n * n;
  std::vector<std::string> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<Scalar> mult(static_cast<size_t>(r) * r * r);
  // E_ij E_jl = E_il
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        size_t x = i * n + j, y = j * n + l, z = i * n + l;
        mult[(x * r + y) * r + z] = 1;
      }
  Vector eps(r);
  for (int i = 0; i < n; ++i) eps[i * n + i] = 1;
  return FrobeniusAlgebra(std::move(basis), std::move(mult), std::move(eps), n == 1);
}

FrobeniusAlgebra group_algebra(const GroupTable& g) {
  const int r = g.order();
  std::vector<Scalar> mult(static_cast<size_t>(r) * r * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) mult[(static_cast<size_t>(a) * r + b) * r + g.mul(a, b)] = 1;
  Vector eps(r);
  eps[g.identity()] = 1;
  return FrobeniusAlgebra(element_names(g), std::move(mult), std::move(eps), g.abelian());
}

FrobeniusAlgebra center_of_group_algebra(const GroupTable& g, CenterCounit counit) {
  auto classes = conjugacy_classes(g);
  const int r = static_cast<int>(classes.size());
  std::vector<int> class_of(g.order());
  for (int c = 0; c < r; ++c)
    for (int x : classes[c]) class_of[x] = c;

  std::vector<Scalar> mult(static_cast<size_t>(r) * r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      // C_i C_j = sum_k c_ij^k C_k; c_ij^k counts products landing on a fixed member of C_k.
      std::vector<int> hits(g.order(), 0);
      for (int x : classes[i])
        for (int y : classes[j]) ++hits[g.mul(x, y)];
      for (int k = 0; k < r; ++k) mult[(static_cast<size_t>(i) * r + j) * r + k] = hits[classes[k][0]];
    }

  std::vector<std::string> basis;
  auto names = element_names(g);
  for (const auto& cls : classes) basis.push_back("K[" + names[cls[0]] + "]");
  Vector eps(r);
  eps[0] = counit == CenterCounit::kDijkgraafWitten ? Scalar(1, g.order()) : Scalar(1);
  return FrobeniusAlgebra(std::move(basis), std::move(mult), std::move(eps), true);
}

Scalar hom_count_oracle(const GroupTable& g, int genus, double max_tuples) {
  if (genus < 0) throw InputError("genus must be non-negative");
  const int n = g.order();
  if (std::pow(static_cast<double>(n), 2.0 * genus) > max_tuples) {
    throw GuardError("hom_count_oracle: |G|^(2g) exceeds the enumeration guard");
  }
  std::vector<std::vector<int>> comm(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comm[a][b] = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));

  std::vector<int> tuple(2 * genus, 0);
  Integer hits = 0;
  while (true) {
    int prod = g.identity();
    for (int i = 0; i < genus; ++i) prod = g.mul(prod, comm[tuple[2 * i]][tuple[2 * i + 1]]);
    if (prod == g.identity()) ++hits;
    int pos = 2 * genus - 1;
    while (pos >= 0 && ++tuple[pos] == n) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  Scalar q(hits, Integer(n));
  q.canonicalize();
  return q;
}

FrobeniusAlgebra preset_algebra(std::string_view name) {
  std::string_view s = name;
  if (strip(s, "K^", "")) return semisimple(parse_positive(s, name));
  s = name;
  if (strip(s, "Mat", "")) return matrix_algebra(parse_positive(s, name));
  s = name;
  if (strip(s, "ZC[", "]")) return center_of_group_algebra(preset_group(s));
  s = name;
  if (strip(s, "C[", "]")) return group_algebra(preset_group(s));
  throw InputError("unknown algebra preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_algebra_names() {
  return {"K^<n>", "Mat<n>", "ZC[S3]", "ZC[Z/<n>]", "ZC[D<n>]", "C[Z/<n>]", "C[S3]", "C[D<n>]"};
}

}  // namespace tqft
