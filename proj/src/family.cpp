#include "askw/family.hpp"

#include <numeric>

#include "askw/error.hpp"

namespace askw {

std::vector<std::string> FamilyParams::variable_names() const {
  std::vector<std::string> names{"x"};
  for (int s = 1; s <= num_deformation_params(); ++s) names.push_back("x_" + std::to_string(s));
  return names;
}

FamilyParams validate_params(long p, long q, long ell) {
  if (p > 0xFFFF) throw Error(ErrorKind::Unsupported, "p is too large");
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::NonPrimeP, "p must be prime (an odd prime), got " + std::to_string(p));
  }
  if (q < 1) throw Error(ErrorKind::NonPositiveQ, "q must be positive, got " + std::to_string(q));
  if (q > 0xFFFF) throw Error(ErrorKind::Unsupported, "q is too large");
  if (ell < 1 || ell >= p) {
    throw Error(ErrorKind::EllOutOfRange,
                "ell must satisfy 1 <= ell <= p-1, got " + std::to_string(ell));
  }
  FamilyParams out;
  out.p = static_cast<int>(p);
  out.q = static_cast<int>(q);
  out.ell = static_cast<int>(ell);
  out.m = out.p * out.q - out.ell;
  if (out.m < 1 || std::gcd(out.p, out.m) != 1) {
    throw std::logic_error("validate_params: m = pq - ell must be positive and prime to p");
  }
  out.genus = genus(out);
  out.flags.trigonal_risk = out.p == 3;
  out.flags.plane_quintic_risk = out.genus == 6 && out.p == 5 && out.q == 1;
  out.flags.hyperelliptic_risk = out.genus < 3 || out.m == 2;
  return out;
}

long genus(const FamilyParams& params) {
  long g = 0;
  for (long mu = 1; mu <= params.p - 1; ++mu) {
    g += mu * params.q - (mu * params.ell) / params.p - 1;
  }
  return g;
}

int j_min(const FamilyParams& params, int i) {
  if (i < 0 || i > params.p) {
    throw Error(ErrorKind::IOutOfRange, "i must lie in [0, p], got " + std::to_string(i));
  }
  return params.ell == 1 ? 0 : params.p - i;
}

void require_polynomial_support(const FamilyParams& params) {
  if (params.q > kMaxPolyQ) {
    throw Error(ErrorKind::Unsupported,
                "polynomial computations support q <= " + std::to_string(kMaxPolyQ));
  }
}

APolynomial a_polynomial(const FamilyParams& params) {
  require_polynomial_support(params);
  APolynomial out;
  out.q = params.q;
  out.has_constant_term = params.ell == 1;
  const std::size_t nv = params.poly_vars();
  out.poly = ZPoly::variable(nv, 0, Rational(1), static_cast<unsigned>(params.q));
  out.coefficients.push_back("1");
  for (int s = 1; s <= params.q; ++s) {
    if (s == params.q && !out.has_constant_term) {
      out.coefficients.push_back("0");
      continue;
    }
    out.coefficients.push_back("x_" + std::to_string(s));
    Exponents e;
    e.e[0] = static_cast<std::uint16_t>(params.q - s);
    e.e[s] = 1;
    out.poly.add_term(e, Rational(1));
  }
  return out;
}

namespace {

void check_i(const FamilyParams& params, int i) {
  if (i < 0 || i > params.p - 1) {
    throw Error(ErrorKind::IOutOfRange, "i must lie in [0, p-1], got " + std::to_string(i));
  }
}

std::map<int, ZPoly> split_by_x(const ZPoly& f) {
  std::map<int, ZPoly> out;
  for (const auto& [e, c] : f.terms()) {
    Exponents rest = e;
    rest.e[0] = 0;
    auto it = out.try_emplace(static_cast<int>(e.e[0]), ZPoly(f.nvars())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

}  // namespace

std::map<int, ZPoly> a_power_coeffs(const FamilyParams& params, int i) {
  check_i(params, i);
  const ZPoly a = a_polynomial(params).poly;
  ZPoly acc = ZPoly::constant(a.nvars(), Rational(1));
  for (int k = 0; k < params.p - i; ++k) acc = acc * a;
  return split_by_x(acc);
}

std::map<int, ZPoly> a_power_coeffs_multinomial(const FamilyParams& params, int i) {
  check_i(params, i);
  const int n = params.p - i;
  const int top = params.num_deformation_params();
  const std::size_t nv = params.poly_vars();
  std::map<int, ZPoly> out;
  // t[0] counts the leading x^q factor, t[s] the x_s x^(q-s) factors.
  std::vector<int> t(static_cast<std::size_t>(top) + 1, 0);
  Integer n_fact;
  mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));

  auto emit = [&]() {
    int j = 0;
    Integer denom = 1;
    Exponents e;
    for (int s = 0; s <= top; ++s) {
      j += t[s] * (params.q - s);
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(t[s]));
      denom *= f;
      if (s > 0) e.e[s] = static_cast<std::uint16_t>(t[s]);
    }
    auto it = out.try_emplace(j, ZPoly(nv)).first;
    it->second.add_term(e, Rational(Integer(n_fact / denom)));
  };

  auto rec = [&](auto&& self, int s, int remaining) -> void {
    if (s == top) {
      t[s] = remaining;
      emit();
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      t[s] = k;
      self(self, s + 1, remaining - k);
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace askw
