#include "joinalg/group.hpp"

#include <array>
#include <regex>

#include "joinalg/rational.hpp"

namespace joinalg {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw MalformedInput("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw MalformedInput("group table is not square");
    for (auto v : row) {
      if (v >= n) throw MalformedInput("group table entry out of range");
    }
  }
  if (names_.empty()) {
    for (std::size_t g = 0; g < n; ++g) names_.push_back(std::to_string(g));
  } else if (names_.size() != n) {
    throw MalformedInput("group element names do not match the order");
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (std::size_t g = 0; g < n && is_identity; ++g) {
      is_identity = table_[e][g] == g && table_[g][e] == g;
    }
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw MalformedInput("group table has no identity element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw MalformedInput("group table is not associative at (" + std::to_string(a) + ", " +
                               std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }

  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) throw MalformedInput("group element " + std::to_string(a) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  std::vector<std::vector<std::size_t>> table(na * nb, std::vector<std::size_t>(na * nb));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
      for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t l = 0; l < nb; ++l) table[i * nb + j][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
      }
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations in lexicographic order; product is composition (a·b)(x) = a(b(x)).
  const std::array<std::array<std::size_t, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<std::size_t, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == p) return i;
    }
    return perms.size();
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < 6; ++a) {
    names.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = index_of(c);
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  static const std::regex cyclic_pattern(R"(Z/(\d+))");
  std::smatch match;
  if (std::regex_match(name, match, cyclic_pattern)) {
    const auto n = std::stoul(match[1].str());
    if (n == 0) throw MalformedInput("Z/0 is not a finite group");
    return cyclic(n);
  }
  if (name == "Z/2xZ/2" || name == "Z/2×Z/2" || name == "V4") return direct_product(cyclic(2), cyclic(2));
  if (name == "S3") return symmetric3();
  if (name == "trivial") return trivial();
  throw MalformedInput("unknown builtin group \"" + name + "\"");
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace joinalg
