#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "picard/eisenstein.hpp"
#include "picard/errors.hpp"

using namespace picard;

namespace {

EisensteinInt random_int(std::mt19937_64& rng, long r = 50) {
  return {oracle::uniform(rng, -r, r), oracle::uniform(rng, -r, r)};
}

}  // namespace

TEST_CASE("eis_mul examples") {
  const EisensteinInt w = EisensteinInt::omega();
  CHECK(w * w == EisensteinInt(-1, -1));
  CHECK(EisensteinInt(7, -3) * EisensteinInt(1) == EisensteinInt(7, -3));
  CHECK(EisensteinInt(1, 1) * EisensteinInt(1, 1) == EisensteinInt(0, 1));
  CHECK(oracle::close(oracle::embed(1, 1) * oracle::embed(1, 1), oracle::embed(0, 1)));
}

TEST_CASE("eis_conj examples") {
  CHECK(eis_conj(EisensteinInt::omega()) == EisensteinInt(-1, -1));
  CHECK(eis_conj(EisensteinInt(3)) == EisensteinInt(3));
  CHECK(eis_conj(EisensteinInt(2, 5)) == EisensteinInt(-3, -5));
  CHECK(oracle::close(std::conj(oracle::embed(2, 5)), oracle::embed(-3, -5)));
}

TEST_CASE("eis_norm examples") {
  CHECK(eis_norm(EisensteinInt::omega()) == 1);
  CHECK(eis_norm(EisensteinInt(0)) == 0);
  CHECK(eis_norm(EisensteinInt(2, 1)) == 3);
  CHECK(std::norm(oracle::embed(2, 1)) == doctest::Approx(3.0));
}

TEST_CASE("ring axioms and embedding consistency on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto x = random_int(rng), y = random_int(rng), z = random_int(rng);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(eis_norm(x * y) == eis_norm(x) * eis_norm(y));
    CHECK(eis_conj(eis_conj(x)) == x);
    CHECK(eis_conj(x * y) == eis_conj(x) * eis_conj(y));
    CHECK(x * eis_conj(x) == EisensteinInt(eis_norm(x)));
    CHECK(oracle::close(oracle::embed(x * y), oracle::embed(x) * oracle::embed(y)));
    CHECK(oracle::close(oracle::embed(x + y), oracle::embed(x) + oracle::embed(y)));
    CHECK(oracle::close(oracle::embed(eis_conj(x)), std::conj(oracle::embed(x))));
    CHECK(eis_norm(x).get_d() == doctest::Approx(std::norm(oracle::embed(x))));
  }
}

TEST_CASE("norm is zero only at zero") {
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) CHECK((eis_norm(EisensteinInt(a, b)) == 0) == (a == 0 && b == 0));
}

TEST_CASE("unit group is exactly mu6") {
  std::set<std::pair<long, long>> found;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      if (eis_norm(EisensteinInt(a, b)) == 1) found.insert({a, b});
  CHECK(found.size() == 6);
  const std::set<std::pair<long, long>> mu6{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}};
  CHECK(found == mu6);

  std::set<std::pair<long, long>> listed;
  for (const auto& u : Unit::all()) listed.insert({u.value().a.get_si(), u.value().b.get_si()});
  CHECK(listed == mu6);
  for (const auto& u : Unit::all()) {
    for (const auto& v : Unit::all()) CHECK(Unit::is_unit((u * v).value()));
    CHECK(u * u.inverse() == Unit());
  }
  CHECK_THROWS_AS(Unit(EisensteinInt(2)), DomainError);
}

TEST_CASE("EisensteinFrac canonical form") {
  const EisensteinFrac z(EisensteinInt(4, -6), 8);
  CHECK(z.num() == EisensteinInt(2, -3));
  CHECK(z.den() == 4);
  const EisensteinFrac neg(EisensteinInt(1, 1), -2);
  CHECK(neg.num() == EisensteinInt(-1, -1));
  CHECK(neg.den() == 2);
  CHECK_THROWS_AS(EisensteinFrac(EisensteinInt(1), 0), DomainError);

  // cross-multiplication equality agrees with canonical equality
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_int(rng, 20);
    const long d1 = oracle::uniform(rng, 1, 30), d2 = oracle::uniform(rng, 1, 30);
    const long s = oracle::uniform(rng, 1, 9);
    const EisensteinFrac p(x, d1), q(mpz_class(s) * x, mpz_class(s * d1));
    CHECK(p == q);
    const EisensteinFrac r(x, d2);
    const bool cross = mpz_class(d2) * x == mpz_class(d1) * x;
    CHECK((p == r) == cross);
  }
}

TEST_CASE("EisensteinFrac field operations") {
  const EisensteinInt x(3, 5), y(-2, 7);
  const EisensteinFrac q = EisensteinFrac::quotient(x, y);
  CHECK(q * EisensteinFrac(y) == EisensteinFrac(x));
  CHECK(oracle::close(oracle::embed(q.num()) / q.den().get_d(), oracle::embed(x) / oracle::embed(y)));
  CHECK_THROWS_AS(EisensteinFrac::quotient(x, EisensteinInt(0)), DomainError);
  CHECK(eis_norm(q) == mpq_class(eis_norm(x), eis_norm(y)));
  CHECK(EisensteinFrac(x) - EisensteinFrac(x) == EisensteinFrac());
}

TEST_CASE("re_im examples") {
  auto [re, im] = re_im(EisensteinFrac(EisensteinInt::omega()));
  CHECK(re == mpq_class(-1, 2));
  CHECK(im.coeff == mpq_class(1, 2));

  auto [re1, im1] = re_im(EisensteinFrac(EisensteinInt(1)));
  CHECK(re1 == 1);
  CHECK(im1.coeff == 0);

  auto [re2, im2] = re_im(EisensteinFrac(EisensteinInt(1, 2)));
  CHECK(re2 == 0);
  CHECK(im2.coeff == 1);
}

TEST_CASE("re_im reconstructs the embedding") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const EisensteinFrac z(random_int(rng, 100), oracle::uniform(rng, 1, 1000));
    auto [re, im] = re_im(z);
    const auto c = oracle::embed(z.num()) / z.den().get_d();
    CHECK(re.get_d() == doctest::Approx(c.real()));
    CHECK(im.coeff.get_d() * std::sqrt(3.0) == doctest::Approx(c.imag()));
    CHECK(re * re + im.squared() == eis_norm(z));
  }
}

TEST_CASE("round_nearest examples") {
  CHECK(round_nearest(EisensteinFrac(EisensteinInt::omega())) == EisensteinInt::omega());
  CHECK(round_nearest(EisensteinFrac(EisensteinInt(1), 2)) == EisensteinInt(0));
  // 0 and 1 + w are both at distance^2 1/4; (0, 0) is lexicographically smaller
  CHECK(round_nearest(EisensteinFrac(EisensteinInt(1, 1), 2)) == EisensteinInt(0));
  CHECK(round_nearest(EisensteinFrac(EisensteinInt(-1), 2)) == EisensteinInt(-1));
}

TEST_CASE("round_nearest agrees with brute force and stays in the hexagon") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 3000; ++i) {
    const long d = oracle::uniform(rng, 1, 1000);
    const long a = oracle::uniform(rng, -20 * d, 20 * d), b = oracle::uniform(rng, -20 * d, 20 * d);
    const EisensteinFrac z(EisensteinInt(a, b), d);
    const EisensteinInt u = round_nearest(z);
    const auto ref = oracle::brute_force_nearest(z.num().a.get_si(), z.num().b.get_si(), z.den().get_si());
    CHECK(u == EisensteinInt(ref.a, ref.b));
    const mpq_class dist = eis_norm(z - EisensteinFrac(u));
    CHECK(dist <= mpq_class(1, 3));
  }
}

TEST_CASE("hexagon vertices are at distance exactly 1/sqrt3") {
  // i/sqrt3 = (1 + 2w)/3
  const EisensteinFrac top(EisensteinInt(1, 2), 3);
  CHECK(eis_norm(top) == mpq_class(1, 3));
  CHECK(eis_norm(top - EisensteinFrac(round_nearest(top))) == mpq_class(1, 3));
}
