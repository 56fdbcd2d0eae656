#include "otlab/exact_core.hpp"

namespace otlab {

namespace {

constexpr std::size_t kSmallBits = 40;

template <class T>
int sign_of(const T& v) {
  return (v > 0) - (v < 0);
}

}  // namespace

SpherePoint::SpherePoint(BigInt x, BigInt y, BigInt z) : c_{std::move(x), std::move(y), std::move(z)} {
  if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0) throw InvalidArgument("zero direction vector");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), c_[0].get_mpz_t(), c_[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_[2].get_mpz_t());
  if (g != 1)
    for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  small_ = true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (mpz_sizeinbase(c_[i].get_mpz_t(), 2) > kSmallBits) {
      small_ = false;
      break;
    }
    s_[i] = c_[i].get_si();
  }
  if (!small_) s_ = {};
}

SpherePoint SpherePoint::from_rationals(const BigRational& x, const BigRational& y,
                                        const BigRational& z) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.get_den_mpz_t());
  auto scaled = [&](const BigRational& v) -> BigInt { return v.get_num() * (l / v.get_den()); };
  return SpherePoint(scaled(x), scaled(y), scaled(z));
}

std::string SpherePoint::to_string() const {
  return "(" + c_[0].get_str() + "," + c_[1].get_str() + "," + c_[2].get_str() + ")";
}

int orient(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r) {
  if (p.is_small() && q.is_small() && r.is_small()) {
    using i128 = __int128;
    const auto& a = p.small_coords();
    const auto& b = q.small_coords();
    const auto& c = r.small_coords();
    const i128 m0 = static_cast<i128>(b[1]) * c[2] - static_cast<i128>(b[2]) * c[1];
    const i128 m1 = static_cast<i128>(b[2]) * c[0] - static_cast<i128>(b[0]) * c[2];
    const i128 m2 = static_cast<i128>(b[0]) * c[1] - static_cast<i128>(b[1]) * c[0];
    return sign_of(a[0] * m0 + a[1] * m1 + a[2] * m2);
  }
  thread_local BigInt m, acc;
  const auto& P = p.coords();
  const auto& Q = q.coords();
  const auto& R = r.coords();
  mpz_mul(m.get_mpz_t(), Q[1].get_mpz_t(), R[2].get_mpz_t());
  mpz_submul(m.get_mpz_t(), Q[2].get_mpz_t(), R[1].get_mpz_t());
  mpz_mul(acc.get_mpz_t(), P[0].get_mpz_t(), m.get_mpz_t());
  mpz_mul(m.get_mpz_t(), Q[2].get_mpz_t(), R[0].get_mpz_t());
  mpz_submul(m.get_mpz_t(), Q[0].get_mpz_t(), R[2].get_mpz_t());
  mpz_addmul(acc.get_mpz_t(), P[1].get_mpz_t(), m.get_mpz_t());
  mpz_mul(m.get_mpz_t(), Q[0].get_mpz_t(), R[1].get_mpz_t());
  mpz_submul(m.get_mpz_t(), Q[1].get_mpz_t(), R[0].get_mpz_t());
  mpz_addmul(acc.get_mpz_t(), P[2].get_mpz_t(), m.get_mpz_t());
  return mpz_sgn(acc.get_mpz_t());
}

int dot_sign(const SpherePoint& p, const std::array<BigInt, 3>& v) {
  thread_local BigInt acc;
  const auto& P = p.coords();
  mpz_mul(acc.get_mpz_t(), P[0].get_mpz_t(), v[0].get_mpz_t());
  mpz_addmul(acc.get_mpz_t(), P[1].get_mpz_t(), v[1].get_mpz_t());
  mpz_addmul(acc.get_mpz_t(), P[2].get_mpz_t(), v[2].get_mpz_t());
  return mpz_sgn(acc.get_mpz_t());
}

BigInt dot(const SpherePoint& p, const SpherePoint& q) {
  return p.x() * q.x() + p.y() * q.y() + p.z() * q.z();
}

SpherePoint lift_planar(const BigRational& x, const BigRational& y) {
  return SpherePoint::from_rationals(x, y, BigRational(1));
}

SpherePoint antipode(const SpherePoint& p) { return SpherePoint(-p.x(), -p.y(), -p.z()); }

bool parallel(const SpherePoint& p, const SpherePoint& q) {
  return p.x() * q.y() == p.y() * q.x() && p.y() * q.z() == p.z() * q.y() &&
         p.x() * q.z() == p.z() * q.x();
}

SpherePoint cross_dir(const SpherePoint& p, const SpherePoint& q) {
  if (parallel(p, q)) throw DegenerateAnchor("cross_dir of parallel directions " + p.to_string() +
                                             " and " + q.to_string());
  return SpherePoint(p.y() * q.z() - p.z() * q.y(), p.z() * q.x() - p.x() * q.z(),
                     p.x() * q.y() - p.y() * q.x());
}

}  // namespace otlab
