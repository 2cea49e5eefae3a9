#include "lieord/compalg.hpp"

#include <random>

namespace lieord {

bool CompalgReport::ok() const {
  for (const auto& [name, count] : failures) {
    if (count != 0) return false;
  }
  return e0_dimension == 9 && q_of_u == "1/2";
}

namespace {

Rational random_scalar(std::mt19937_64& rng, const Rational&) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

Fp random_scalar(std::mt19937_64& rng, const Fp& like) {
  std::uniform_int_distribution<long> v(0, like.modulus() - 1);
  return like.make(v(rng));
}

template <class F>
Octonion<F> random_octonion(std::mt19937_64& rng, const F& like) {
  std::array<F, 8> v{like, like, like, like, like, like, like, like};
  for (auto& s : v) s = random_scalar(rng, like);
  return Octonion<F>::from_coordinates(v);
}

template <class F>
F random_nonzero(std::mt19937_64& rng, const F& like) {
  F s = random_scalar(rng, like);
  while (s.is_zero()) s = random_scalar(rng, like);
  return s;
}

template <class F>
AlbertElement<F> random_albert(std::mt19937_64& rng, const std::array<F, 3>& gamma) {
  const F& like = gamma[0];
  return AlbertElement<F>::make(gamma, {random_scalar(rng, like), random_scalar(rng, like), random_scalar(rng, like)},
                                {random_octonion(rng, like), random_octonion(rng, like), random_octonion(rng, like)});
}

template <class F>
void run_suite(CompalgReport& report, const std::string& field, const F& like, int samples, std::mt19937_64& rng) {
  auto fail = [&](const std::string& check, bool ok) {
    report.failures[check + " over " + field] += ok ? 0 : 1;
  };
  for (int s = 0; s < samples; ++s) {
    const auto a = random_octonion(rng, like);
    const auto b = random_octonion(rng, like);
    const auto ab = oct_mul(a, b);
    fail("norm multiplicativity", oct_norm(ab) == oct_norm(a) * oct_norm(b));
    const auto n = Octonion<F>::scalar(oct_norm(a));
    fail("x conj(x) = N(x)", oct_mul(a, oct_conj(a)) == n && oct_mul(oct_conj(a), a) == n);
    fail("conj anti-automorphism", oct_conj(ab) == oct_mul(oct_conj(b), oct_conj(a)) && oct_conj(oct_conj(a)) == a);
  }
  for (int s = 0; s < samples; ++s) {
    const std::array<F, 3> gamma{random_nonzero(rng, like), random_nonzero(rng, like), random_nonzero(rng, like)};
    const auto X = random_albert(rng, gamma);
    const auto Y = random_albert(rng, gamma);
    bool closed = true;
    bool commutes = false;
    try {
      commutes = albert_mul(X, Y) == albert_mul(Y, X);
    } catch (const DomainError&) {
      closed = false;  // the product left the hermitian subspace
    }
    fail("Jordan commutativity", commutes);
    fail("hermitian closure", closed);
    fail("Q evaluations agree", albert_q_trace(X) == albert_q_formula(X));
    fail("X x 1 = X", albert_mul(X, AlbertElement<F>::identity(gamma)) == X);
  }
  const std::array<F, 3> rank_one{like.make(1), like.make(-1), like.make(1)};
  const auto u = albert_idempotent_u(rank_one);
  fail("u x u = u", albert_mul(u, u) == u);
  fail("Q(u) = 1/2", albert_q(u) == like.make(1) / like.make(2));
  const auto basis = e0_basis(rank_one);
  bool conditions = true;
  for (const auto& e : basis) conditions = conditions && in_e0(e);
  fail("E0 conditions", conditions);
  fail("E0 rank 9", albert_rank(basis) == 9 && basis.size() == 9);
  for (int s = 0; s < samples; ++s) {
    const F x = random_scalar(rng, like);
    const auto c = random_octonion(rng, like);
    fail("Q on E0 = x^2 - N(c)", albert_q(e0_element(x, c)) == e0_form(x, c));
  }
}

}  // namespace

CompalgReport verify_compalg(int samples, std::uint64_t seed) {
  CompalgReport report;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  run_suite(report, "Q", Rational(0), samples, rng);
  run_suite(report, "F7", Fp(7, 0), samples, rng);
  run_suite(report, "F11", Fp(11, 0), samples, rng);
  const std::array<Rational, 3> rank_one{Rational(1), Rational(-1), Rational(1)};
  report.e0_dimension = albert_rank(e0_basis(rank_one));
  report.q_of_u = albert_q(albert_idempotent_u(rank_one)).to_string();
  return report;
}

}  // namespace lieord
