#include "paige/loop_table.hpp"

#include <numeric>
#include <ostream>
#include <random>

namespace paige {

namespace {

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

[[noreturn]] void not_a_loop(const std::string& why) { throw AlgebraError(ErrorKind::NotALoop, why); }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

LoopTable::LoopTable(std::size_t n, std::vector<std::uint32_t> products)
    : n_(n), table_(std::move(products)), ldiv_(n * n, kUnset), rdiv_(n * n, kUnset) {
  if (n == 0) not_a_loop("empty table");
  if (table_.size() != n * n) not_a_loop("table has wrong shape");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i) not_a_loop("index 0 is not a two-sided identity");
  }
  // ldiv_[x][x*z] = z fails on a repeat within row x; rdiv_ likewise per column.
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t z = 0; z < n; ++z) {
      const std::uint32_t y = mul(x, z);
      if (y >= n) not_a_loop("entry out of range");
      std::uint32_t& l = ldiv_[x * n + y];
      if (l != kUnset) not_a_loop("row " + std::to_string(x) + " repeats " + std::to_string(y));
      l = z;
      const std::uint32_t w = mul(z, x);
      std::uint32_t& r = rdiv_[x * n + w];
      if (r != kUnset) not_a_loop("column " + std::to_string(x) + " repeats " + std::to_string(w));
      r = z;
    }
  }
}

std::string_view to_string(MoufangVariant v) noexcept {
  switch (v) {
    case MoufangVariant::LeftNested: return "((xy)x)z=x(y(xz))";
    case MoufangVariant::RightNested: return "((zx)y)x=z(x(yx))";
    case MoufangVariant::MiddleLeft: return "(xy)(zx)=(x(yz))x";
    case MoufangVariant::MiddleRight: return "(xy)(zx)=x((yz)x)";
  }
  return "?";
}

bool moufang_holds(const LoopTable& t, MoufangVariant v, std::uint32_t x, std::uint32_t y,
                   std::uint32_t z) noexcept {
  switch (v) {
    case MoufangVariant::LeftNested:
      return t.mul(t.mul(t.mul(x, y), x), z) == t.mul(x, t.mul(y, t.mul(x, z)));
    case MoufangVariant::RightNested:
      return t.mul(t.mul(t.mul(z, x), y), x) == t.mul(z, t.mul(x, t.mul(y, x)));
    case MoufangVariant::MiddleLeft:
      return t.mul(t.mul(x, y), t.mul(z, x)) == t.mul(t.mul(x, t.mul(y, z)), x);
    case MoufangVariant::MiddleRight:
      return t.mul(t.mul(x, y), t.mul(z, x)) == t.mul(x, t.mul(t.mul(y, z), x));
  }
  return false;
}

std::optional<Triple> check_moufang(const LoopTable& t, MoufangVariant v, std::uint64_t seed,
                                    std::size_t samples) {
  const auto n = static_cast<std::uint32_t>(t.size());
  const double cube = static_cast<double>(n) * n * n;
  if (cube <= 3e6) {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
          if (!moufang_holds(t, v, x, y, z)) return Triple{x, y, z};
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const Triple w{pick(rng), pick(rng), pick(rng)};
    if (!moufang_holds(t, v, w[0], w[1], w[2])) return w;
  }
  return std::nullopt;
}

std::optional<Triple> find_nonassociative_triple(const LoopTable& t,
                                                 const std::vector<std::uint32_t>& subset) {
  for (auto x : subset)
    for (auto y : subset) {
      const std::uint32_t xy = t.mul(x, y);
      for (auto z : subset)
        if (t.mul(xy, z) != t.mul(x, t.mul(y, z))) return Triple{x, y, z};
    }
  return std::nullopt;
}

std::optional<Triple> check_nonassociative(const LoopTable& t) {
  std::vector<std::uint32_t> all(t.size());
  std::iota(all.begin(), all.end(), 0U);
  return find_nonassociative_triple(t, all);
}

std::vector<std::uint32_t> subloop_closure(const LoopTable& t,
                                           const std::vector<std::uint32_t>& generators) {
  std::vector<char> in(t.size(), 0);
  std::vector<std::uint32_t> members;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  for (auto g : generators) add(g);
  // Same frontier scheme as closure(): each ordered pair once.
  std::size_t old_end = 0;
  while (old_end < members.size()) {
    const std::size_t frontier_end = members.size();
    for (std::size_t f = old_end; f < frontier_end; ++f) {
      for (std::size_t a = 0; a < frontier_end; ++a) add(t.mul(members[f], members[a]));
      for (std::size_t a = 0; a < old_end; ++a) add(t.mul(members[a], members[f]));
    }
    old_end = frontier_end;
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::optional<std::array<std::uint32_t, 2>> check_diassociativity(
    const LoopTable& t, const std::vector<std::array<std::uint32_t, 2>>& pairs) {
  for (const auto& pair : pairs) {
    const auto sub = subloop_closure(t, {pair[0], pair[1]});
    if (find_nonassociative_triple(t, sub)) return pair;
  }
  return std::nullopt;
}

std::vector<std::array<std::uint32_t, 2>> sample_pairs(std::size_t n, std::size_t count,
                                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::vector<std::array<std::uint32_t, 2>> pairs(count);
  for (auto& pair : pairs) pair = {pick(rng), pick(rng)};
  return pairs;
}

std::vector<std::uint32_t> center(const LoopTable& t) {
  const auto n = static_cast<std::uint32_t>(t.size());
  std::vector<std::uint32_t> result;
  for (std::uint32_t z = 0; z < n; ++z) {
    bool central = true;
    for (std::uint32_t x = 0; x < n && central; ++x) central = t.mul(z, x) == t.mul(x, z);
    for (std::uint32_t x = 0; x < n && central; ++x) {
      const std::uint32_t zx = t.mul(z, x);
      const std::uint32_t xz = t.mul(x, z);
      for (std::uint32_t y = 0; y < n && central; ++y) {
        const std::uint32_t xy = t.mul(x, y);
        central = t.mul(zx, y) == t.mul(z, xy) && t.mul(xz, y) == t.mul(x, t.mul(z, y)) &&
                  t.mul(xy, z) == t.mul(x, t.mul(y, z));
      }
    }
    if (central) result.push_back(z);
  }
  return result;
}

std::vector<std::uint32_t> normal_closure(const LoopTable& t, std::uint32_t g) {
  const auto n = static_cast<std::uint32_t>(t.size());
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> pending;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      pending.push_back(x);
    }
  };
  add(0);
  add(g);
  while (!pending.empty()) {
    const std::uint32_t a = pending.back();
    pending.pop_back();
    // Products with everything already present; later arrivals pair with a
    // when they are themselves processed.
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::uint32_t b = members[i];
      add(t.mul(a, b));
      add(t.mul(b, a));
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t ax = t.mul(a, x);
      const std::uint32_t xa = t.mul(x, a);
      add(t.left_div(x, ax));
      for (std::uint32_t y = 0; y < n; ++y) {
        add(t.left_div(t.mul(y, x), t.mul(y, xa)));
        add(t.right_div(t.mul(ax, y), t.mul(x, y)));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint32_t> normal_closure_congruence(const LoopTable& t, std::uint32_t g) {
  const auto n = static_cast<std::uint32_t>(t.size());
  UnionFind classes(n);
  std::vector<std::array<std::uint32_t, 2>> pending;
  if (classes.unite(0, g)) pending.push_back({0, g});
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t xa = t.mul(x, a), xb = t.mul(x, b);
      if (classes.unite(xa, xb)) pending.push_back({xa, xb});
      const std::uint32_t ax = t.mul(a, x), bx = t.mul(b, x);
      if (classes.unite(ax, bx)) pending.push_back({ax, bx});
    }
  }
  std::vector<std::uint32_t> members;
  const std::uint32_t root = classes.find(0);
  for (std::uint32_t x = 0; x < n; ++x)
    if (classes.find(x) == root) members.push_back(x);
  return members;
}

SimplicityReport simplicity_check(const LoopTable& t, const SimplicityOptions& options) {
  const auto n = static_cast<std::uint32_t>(t.size());
  if (n > kSimplicityBound) {
    throw AlgebraError(ErrorKind::TooLarge, "simplicity check is bounded at " +
                                                std::to_string(kSimplicityBound) +
                                                " elements, loop has " + std::to_string(n));
  }
  SimplicityReport report;
  std::vector<char> covered(n, 0);
  for (std::uint32_t g = 1; g < n; ++g) {
    if (covered[g]) continue;
    const auto ncl = options.method == NormalClosureMethod::InnerMappings
                         ? normal_closure(t, g)
                         : normal_closure_congruence(t, g);
    ++report.closures_computed;
    if (ncl.size() != n) {
      report.simple = false;
      report.witness_generator = g;
      report.witness_subloop = ncl;
      return report;
    }
    covered[g] = 1;
    ++report.elements_covered;
    if (options.skip_conjugates) {
      // ncl(T_x g) = ncl(g)
      for (std::uint32_t x = 0; x < n; ++x) {
        const std::uint32_t conj = t.left_div(x, t.mul(g, x));
        if (!covered[conj]) {
          covered[conj] = 1;
          ++report.elements_covered;
        }
      }
    }
  }
  return report;
}

void write_table_csv(std::ostream& os, const LoopTable& t, unsigned p) {
  const std::size_t n = t.size();
  os << "n=" << n << ",p=" << p << '\n';
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) os << i << ',' << j << ',' << t.mul(i, j) << '\n';
}

std::optional<LoopTable> swap_intercalate(const LoopTable& t) {
  const auto n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t r1 = 1; r1 < n; ++r1)
    for (std::uint32_t r2 = r1 + 1; r2 < n; ++r2)
      for (std::uint32_t c1 = 1; c1 < n; ++c1) {
        const std::uint32_t a = t.mul(r1, c1);
        const std::uint32_t b = t.mul(r2, c1);
        // The column in row r2 holding a, and check row r1 holds b there.
        const std::uint32_t c2 = t.left_div(r2, a);
        if (c2 == 0 || c2 == c1 || t.mul(r1, c2) != b) continue;
        std::vector<std::uint32_t> products = t.products();
        products[r1 * n + c1] = b;
        products[r1 * n + c2] = a;
        products[r2 * n + c1] = a;
        products[r2 * n + c2] = b;
        return LoopTable(n, std::move(products));
      }
  return std::nullopt;
}

}  // namespace paige
