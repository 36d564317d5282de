#include <doctest.h>

#include <complex>
#include <random>

#include "quasi/cyclotomic.hpp"
#include "quasi/error.hpp"

using namespace quasi;

namespace {

// Random element of Q(zeta_N) for N among a few small conductors.
Cyc random_cyc(std::mt19937& rng) {
  static const unsigned conductors[] = {1, 3, 4, 5, 8, 12};
  std::uniform_int_distribution<int> pick(0, 5), coef(-3, 3), den(1, 3);
  unsigned n = conductors[pick(rng)];
  Cyc c(0L);
  for (unsigned k = 0; k < n; ++k) {
    int a = coef(rng);
    if (a) c += Cyc(Rational(a, den(rng))) * Cyc::root(n, k);
  }
  return c;
}

std::complex<double> numeric(const Cyc& c) {
  std::complex<double> z = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k < c.coeffs().size(); ++k)
    z += c.coeffs()[k].get_d() * std::polar(1.0, 2 * pi * double(k) / c.conductor());
  return z;
}

}  // namespace

TEST_CASE("basic identities") {
  CHECK(Cyc::root(4, 1) * Cyc::root(4, 1) == Cyc(-1L));
  CHECK(Cyc::root(3, 1) + Cyc::root(3, 2) == Cyc(-1L));
  CHECK(Cyc::root(8, 1).inverse() == Cyc::root(8, 7));
  CHECK(Cyc(2L).inverse() == Cyc(Rational(1, 2)));
  Cyc x = Cyc(1L) + Cyc::root(3, 1);
  CHECK(x * x.inverse() == Cyc(1L));
  CHECK(Cyc::root(6, 2) == Cyc::root(3, 1));
  CHECK(Cyc::root(6, 2).conductor() == 3);
  CHECK(Cyc::root(4, 2).is_rational());
  CHECK_THROWS_AS(Cyc(0L).inverse(), Error);
}

TEST_CASE("rendering") {
  CHECK(Cyc::root(6, 2).to_string() == "E(3)");
  CHECK(Cyc::root(4, 1).to_string() == "E(4)");
  CHECK(Cyc(Rational(-1, 2)).to_string() == "-1/2");
  CHECK((Cyc(1L) + Cyc::root(3, 1)).inverse().to_string() == "E(6)^5");
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("root of unity exponents") {
  CHECK(as_root_of_unity(Cyc(-1L), 2) == 1u);
  CHECK(as_root_of_unity(Cyc(1L), 4) == 4u);
  CHECK(as_root_of_unity(Cyc::root(6, 2), 3) == 1u);
  CHECK(as_root_of_unity(Cyc::root(4, 1), 2) == std::nullopt);
  CHECK(as_root_of_unity(Cyc(2L), 2) == std::nullopt);
  CHECK(Cyc::root(12, 5).root_angle() == Rational(5, 12));
  CHECK(Cyc(2L).root_angle() == std::nullopt);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    Cyc a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK(a + Cyc(0L) == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Cyc(0L));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyc(1L));
    CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9);
    CHECK(std::abs(numeric(a.abs2()) - std::norm(numeric(a))) < 1e-9);
    CHECK(a.abs2() == a.abs2().conj());
  }
}

TEST_CASE("galois action is a field automorphism") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    Cyc a = random_cyc(rng), b = random_cyc(rng);
    for (long long s : {1LL, 7LL, 11LL, 13LL}) {
      CHECK((a * b).galois(s) == a.galois(s) * b.galois(s));
      CHECK((a + b).galois(s) == a.galois(s) + b.galois(s));
    }
  }
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
}
