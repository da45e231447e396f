#include "paige/isomorphism.hpp"

#include <algorithm>
#include <ostream>

#include "paige/unit_loop.hpp"

namespace paige {

namespace {

constexpr unsigned kBinary = 2;
constexpr std::size_t kM120 = 120;

ZornMatrix antidiagonal(const Vec3& alpha, const Vec3& beta) {
  return ZornMatrix(Fp(0, kBinary), alpha, beta, Fp(0, kBinary));
}

[[noreturn]] void collision(const PairMap::Entry& old_entry, const PairMap::Entry& incoming) {
  throw AlgebraError(ErrorKind::IsomorphismFailure,
                     "relation pairs " + to_string(incoming.source.rep()) + " with " +
                         to_string(incoming.image.matrix()) + " but already with " +
                         to_string(old_entry.source.rep()) + " -> " +
                         to_string(old_entry.image.matrix()));
}

}  // namespace

const CanonicalElement& PairMap::image(const UnitClass& x) const {
  const auto i = by_source_.find(x.key());
  if (!i) throw AlgebraError(ErrorKind::NotSurjective, to_string(x.rep()) + " has no image");
  return entries_[*i].image;
}

const UnitClass& PairMap::preimage(const CanonicalElement& y) const {
  const auto i = by_image_.find(y.key());
  if (!i) throw AlgebraError(ErrorKind::NotSurjective, to_string(y.matrix()) + " has no preimage");
  return entries_[*i].source;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> PairMap::graph() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.emplace_back(e.source.key(), e.image.key());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PairMap::Entry> isomorphism_seeds() {
  const unsigned p = kBinary;
  const Vec3 e2 = Vec3::unit(2, p);
  const Vec3 e3 = Vec3::unit(3, p);
  const ZornMatrix h_image(Fp(1, p), Vec3(0, 1, 0, p), Vec3(1, 0, 1, p), Fp(1, p));
  return {
      {canonical_unit(Octonion::basis(1)), canonicalize(antidiagonal(e3, e3))},
      {canonical_unit(Octonion::basis(2)), canonicalize(antidiagonal(e2, e2))},
      {canonical_unit(make_h()), canonicalize(h_image)},
  };
}

PairMap close_pair_relation(const std::vector<PairMap::Entry>& seeds) {
  PairMap map;
  auto add = [&](const PairMap::Entry& entry) {
    const auto src = map.by_source_.find(entry.source.key());
    const auto img = map.by_image_.find(entry.image.key());
    if (src) {
      if (map.entries_[*src].image != entry.image) collision(map.entries_[*src], entry);
      return;
    }
    if (img) collision(map.entries_[*img], entry);
    const auto index = static_cast<std::uint32_t>(map.entries_.size());
    map.entries_.push_back(entry);
    map.by_source_.insert(entry.source.key(), index);
    map.by_image_.insert(entry.image.key(), index);
  };
  for (const auto& s : seeds) add(s);

  auto product = [](const PairMap::Entry& a, const PairMap::Entry& b) {
    return PairMap::Entry{a.source * b.source, a.image * b.image};
  };
  std::size_t old_end = 0;
  while (old_end < map.entries_.size()) {
    const std::size_t frontier_end = map.entries_.size();
    for (std::size_t f = old_end; f < frontier_end; ++f) {
      for (std::size_t a = 0; a < frontier_end; ++a) add(product(map.entries_[f], map.entries_[a]));
      for (std::size_t a = 0; a < old_end; ++a) add(product(map.entries_[a], map.entries_[f]));
    }
    old_end = frontier_end;
  }
  return map;
}

PairMap build_isomorphism() {
  PairMap map = close_pair_relation(isomorphism_seeds());
  const auto classes = jprime_classes(jprime_enumerate());
  const auto loop = enumerate_unit_loop(kBinary);
  if (map.size() != classes.size() || map.size() != loop.size() || map.size() != kM120) {
    throw AlgebraError(ErrorKind::NotSurjective,
                       "relation covers " + std::to_string(map.size()) + " pairs; J'/{1,-1} has " +
                           std::to_string(classes.size()) + " classes and M(2) has " +
                           std::to_string(loop.size()) + " elements");
  }
  for (const auto& c : classes) map.image(c);
  for (const auto& m : loop) map.preimage(m);
  return map;
}

std::optional<HomViolation> verify_hom(const PairMap& map) {
  for (const auto& x : map.entries())
    for (const auto& y : map.entries())
      if (map.image(x.source * y.source) != x.image * y.image) return HomViolation{x.source, y.source};
  return std::nullopt;
}

std::optional<std::array<CanonicalElement, 2>> verify_inverse_hom(const PairMap& map) {
  for (const auto& a : map.entries())
    for (const auto& b : map.entries())
      if (map.preimage(a.image * b.image) != a.source * b.source)
        return std::array<CanonicalElement, 2>{a.image, b.image};
  return std::nullopt;
}

std::optional<UnitClass> verify_inverse_classes(const PairMap& map) {
  for (const auto& e : map.entries()) {
    const UnitClass inverse = canonical_unit(oct_conj(e.source.rep()));
    if (map.image(inverse) != canonicalize(zorn_inv(e.image.matrix()))) return e.source;
  }
  return std::nullopt;
}

std::vector<LemmaCheck> verify_lemma7(const PairMap& map) {
  const Octonion one = Octonion::one();
  const Octonion i = Octonion::basis(1), j = Octonion::basis(2), k = Octonion::basis(3);
  const Octonion e = Octonion::basis(4);
  const Octonion h = make_h();
  const Octonion kh = k * h;
  const Octonion two_h = h + h;

  const ZornMatrix e_image(Fp(0, kBinary), Vec3(1, 1, 1, kBinary), Vec3(1, 1, 1, kBinary),
                           Fp(0, kBinary));

  return {
      {"e=-(jh.hi).kh", -((j * h) * (h * i)) * kh == e},
      {"phi(e)=[[0,(1,1,1)],[(1,1,1),0]]", map.image(canonical_unit(e)) == canonicalize(e_image)},
      {"hi=-1-ih", h * i == -one - i * h},
      {"jh.kh=-i+h-kh", (j * h) * kh == -i + h - kh},
      {"k.kh=-h", k * kh == -h},
      {"h.kh=k-h", h * kh == k - h},
      {"ih.kh=j-h-kh", (i * h) * kh == j - h - kh},
      {"-i-j-k+2h=e", -i - j - k + two_h == e},
  };
}

void write_map_csv(std::ostream& os, const PairMap& map) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(map.size());
  for (const auto& entry : map.entries())
    rows.emplace_back(to_string(entry.source.rep()), to_string(entry.image.matrix()));
  std::sort(rows.begin(), rows.end());
  os << "octonion_class,zorn_matrix\n";
  for (const auto& [oct, zorn] : rows) os << '"' << oct << "\",\"" << zorn << "\"\n";
}

}  // namespace paige
