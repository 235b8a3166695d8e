#include <doctest.h>

#include <random>

#include "mtc/cyclofield.hpp"
#include "mtc/error.hpp"
#include "mtc/qseries.hpp"
#include "mtc/specialforms.hpp"

using namespace mtc;

namespace {

CycloNum random_field(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(-20, 20), d(1, 6), k(0, 239), count(1, 5);
  CycloNum x;
  for (int i = count(rng); i > 0; --i) x += CycloNum(Rational(n(rng), d(rng))) * zeta(240, k(rng));
  return x;
}

QSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 24), v(-3, 3), k(0, 239), count(1, 8);
  std::uniform_int_distribution<int> den(0, 2);
  const int dens[] = {1, 5, 60};
  const int q = dens[den(rng)];
  QSeries::Terms t;
  for (int i = count(rng); i > 0; --i) t[QExponent(e(rng), q)] += CycloNum(v(rng)) * zeta(240, k(rng));
  std::erase_if(t, [](const auto& p) { return p.second.is_zero(); });
  return QSeries(std::move(t), QExponent(6));
}

bool same(const QSeries& f, const QSeries& g) { return compare(f, g).equal && f.bound() == g.bound(); }

}  // namespace

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  const auto group = galois_group();
  for (int i = 0; i < 1000; ++i) {
    const CycloNum a = random_field(rng), b = random_field(rng), c = random_field(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycloNum());
    CHECK(a * CycloNum(1) == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycloNum(1));
    const auto& phi = group[static_cast<std::size_t>(i) % group.size()];
    CHECK(apply_automorphism(phi, a * b + c) ==
          apply_automorphism(phi, a) * apply_automorphism(phi, b) + apply_automorphism(phi, c));
  }
}

TEST_CASE("series ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QSeries f = random_series(rng), g = random_series(rng), h = random_series(rng);
    CHECK(same(add(f, g), add(g, f)));
    CHECK(same(mul(f, g), mul(g, f)));
    CHECK(same(add(add(f, g), h), add(f, add(g, h))));
    CHECK(same(mul(mul(f, g), h), mul(f, mul(g, h))));
    CHECK(same(mul(f, add(g, h)), add(mul(f, g), mul(f, h))));
    CHECK(sub(f, f).terms().empty());
    // 1 + f has a unit constant term once f has positive valuation
    QSeries::Terms t = f.terms();
    t.erase(QExponent(0));
    const QSeries u = add(QSeries::constant(CycloNum(1)), QSeries(std::move(t), f.bound()));
    const QSeries prod = mul(u, invert(u));
    CHECK(compare(prod, QSeries::constant(CycloNum(1)), QExponent(5)).equal);
  }
}

TEST_CASE("Sturm guard refuses every under-bounded run") {
  std::mt19937_64 rng(3);
  const auto ids = identity_ids();
  const QExponent min = identity_min_bound();
  std::uniform_int_distribution<long> num(1, 1000);
  for (int i = 0; i < 50; ++i) {
    const QExponent b = min * QExponent(num(rng), 1001);
    const std::string& id = ids[static_cast<std::size_t>(i) % ids.size()];
    try {
      verify_identity(id, b);
      FAIL("accepted bound " << to_string(b) << " for " << id);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::insufficient_precision);
    }
  }
  CHECK_NOTHROW(verify_identity(ids.front(), min));
}
