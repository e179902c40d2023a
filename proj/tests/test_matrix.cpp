#include <catch2/catch_amalgamated.hpp>

#include "lrtwist/matrix.hpp"
#include "lrtwist/tensor.hpp"

using namespace lrtwist;

namespace {

// Small deterministic generator for property tests; no library RNG so the
// sampled values are identical on every platform.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  }
};

template <class K>
Matrix<K> random_matrix(const K& f, int n, Lcg& g, int span) {
  Matrix<K> m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = f.from_int(static_cast<long>(g.next() % span) - span / 2);
  return m;
}

}  // namespace

TEST_CASE("kron of identities is the identity", "[matrix]") {
  QQ q;
  auto i2 = Matrix<QQ>::identity(q, 2);
  auto i3 = Matrix<QQ>::identity(q, 3);
  CHECK(i2.kron(i3) == Matrix<QQ>::identity(q, 6));
}

TEST_CASE("kron follows the row-major last-factor-fastest convention", "[matrix]") {
  QQ q;
  Matrix<QQ> m(q, 2, 2), n(q, 2, 2);
  m.at(0, 1) = Rational(1);   // M e1 = e0
  n.at(1, 0) = Rational(3);   // N e0 = 3 e1
  auto k = m.kron(n);
  // (M⊗N)(e1⊗e0) = e0⊗3e1: column 1·2+0=2, row 0·2+1=1
  CHECK(k.at(1, 2) == Rational(3));
  int nonzero = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!k.at(i, j).is_zero()) ++nonzero;
  CHECK(nonzero == 1);
}

TEST_CASE("kron is associative on the flat ordering", "[matrix]") {
  GFp f7(7);
  Lcg g(42);
  auto a = random_matrix(f7, 2, g, 7);
  auto b = random_matrix(f7, 3, g, 7);
  auto c = random_matrix(f7, 2, g, 7);
  CHECK(a.kron(b).kron(c) == a.kron(b.kron(c)));
}

TEST_CASE("exact inverse of a unipotent matrix", "[matrix]") {
  QQ q;
  Matrix<QQ> m(q, 2, 2);
  m.at(0, 0) = Rational(1); m.at(0, 1) = Rational(1);
  m.at(1, 1) = Rational(1);
  auto inv = m.inverse();
  CHECK(inv.at(0, 0) == Rational(1));
  CHECK(inv.at(0, 1) == Rational(-1));
  CHECK(inv.at(1, 0) == Rational(0));
  CHECK(inv.at(1, 1) == Rational(1));
  CHECK((m * inv).is_identity());
}

TEST_CASE("singular matrices report their rank", "[matrix]") {
  QQ q;
  Matrix<QQ> z(q, 2, 2);
  CHECK(z.rank() == 0);
  try {
    z.inverse();
    FAIL("expected singular_error");
  } catch (const singular_error& e) {
    CHECK(e.rank == 0);
  }

  Matrix<QQ> m(q, 3, 3);  // rank 2: rows e0+e1, e1, e0
  m.at(0, 0) = Rational(1); m.at(0, 1) = Rational(1);
  m.at(1, 1) = Rational(1);
  m.at(2, 0) = Rational(1);
  CHECK(m.rank() == 2);
  try {
    m.inverse();
    FAIL("expected singular_error");
  } catch (const singular_error& e) {
    CHECK(e.rank == 2);
  }
}

TEST_CASE("inverse times original is the identity over GF(p)", "[matrix]") {
  GFp f5(5);
  Lcg g(7);
  int inverted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(f5, 3, g, 5);
    if (m.rank() < 3) continue;
    auto inv = m.inverse();
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
    ++inverted;
  }
  CHECK(inverted > 10);
}

TEST_CASE("matrix product is exact over the rationals", "[matrix]") {
  QQ q;
  Matrix<QQ> a(q, 2, 3), b(q, 3, 2);
  long v = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = Rational(++v, 3);
  v = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) b.at(i, j) = Rational(++v, 2);
  auto c = a * b;
  // row 0: (1/3,2/3,1)·(1/2,3/2,5/2) and ·(1,2,3)
  CHECK(c.at(0, 0) == Rational(1, 3) * Rational(1, 2) + Rational(2, 3) * Rational(3, 2) +
                          Rational(1) * Rational(5, 2));
  CHECK(c.at(0, 1) == Rational(1, 3) * Rational(1) + Rational(2, 3) * Rational(2) +
                          Rational(1) * Rational(3));
}

TEST_CASE("shape utilities follow the last-factor-fastest rule", "[matrix]") {
  Shape s{2, 3, 4};
  CHECK(shape_total(s) == 24);
  CHECK(flat_index(s, {1, 2, 3}) == 1 * 12 + 2 * 4 + 3);
  CHECK(unflatten(s, 23) == std::vector<int>{1, 2, 3});
  CHECK(flat_index(s, unflatten(s, 17)) == 17);
  CHECK(shape_total(Shape{}) == 1);
  CHECK(flat_index(Shape{}, {}) == 0);
}

TEST_CASE("flip map swaps tensor factors", "[matrix]") {
  QQ q;
  auto fl = flip_map(q, 2, 3);
  // e1⊗f2 (index 1·3+2=5) ↦ f2⊗e1 (index 2·2+1=5); e0⊗f1 (1) ↦ f1⊗e0 (2)
  CHECK(fl.mat.at(5, 5) == Rational(1));
  CHECK(fl.mat.at(2, 1) == Rational(1));
  CHECK(fl.in == Shape{2, 3});
  CHECK(fl.out == Shape{3, 2});
  auto fl2 = flip_map(q, 3, 2);
  CHECK((fl2.after(fl)).mat.is_identity());
}

TEST_CASE("linear map composition validates shapes", "[matrix]") {
  QQ q;
  auto id2 = LinMap<QQ>::identity(q, {2});
  auto fl = flip_map(q, 2, 2);
  CHECK_THROWS_AS(id2.after(fl), std::invalid_argument);
  CHECK(fl.after(fl).mat.is_identity());
  CHECK_THROWS_AS(LinMap<QQ>({2}, {3}, Matrix<QQ>(q, 2, 2)), std::invalid_argument);
  auto re = fl.with_shapes({4}, {4});
  CHECK(re.in == Shape{4});
  CHECK_THROWS_AS(fl.with_shapes({5}, {4}), std::invalid_argument);
}

TEST_CASE("mixed-field matrix arithmetic is rejected", "[matrix]") {
  GFp f3(3), f5(5);
  Matrix<GFp> a(f3, 2, 2), b(f5, 2, 2);
  CHECK_THROWS_AS(a * b, field_error);
  CHECK_THROWS_AS(a + b, field_error);
  CHECK(a != b);
}
