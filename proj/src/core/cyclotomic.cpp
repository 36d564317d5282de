#include "quasi/cyclotomic.hpp"

#include <map>
#include <numeric>

#include "quasi/error.hpp"

namespace quasi {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(Errc::parse, "bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

Rational frac(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

struct Field {
  unsigned phi = 1;
  std::vector<long> cyclo;  // monic, length phi + 1, lowest degree first
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

const Field& field(unsigned n) {
  thread_local std::map<unsigned, Field> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Field f;
  f.phi = euler_phi(n);
  std::vector<long> p(n + 1, 0);  // x^n - 1
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(std::move(p), field(d).cyclo);
  f.cyclo = std::move(p);
  return cache.emplace(n, std::move(f)).first->second;
}

// Reduces sum dense[k] z^k (z a primitive n-th root) to the power basis.
std::vector<Rational> reduce(unsigned n, const std::vector<Rational>& dense) {
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) v[k % n] += dense[k];
  const Field& f = field(n);
  const unsigned phi = f.phi;
  for (unsigned d = n; d-- > phi;) {
    if (v[d] == 0) continue;
    Rational c = v[d];
    for (unsigned j = 0; j <= phi; ++j)
      if (f.cyclo[j] != 0) v[d - phi + j] -= c * f.cyclo[j];
  }
  v.resize(phi);
  return v;
}

// Power-basis coordinates of Q(zeta_d) inside Q(zeta_n), with a left inverse on pivot rows.
struct Embedding {
  std::vector<std::vector<Rational>> columns;  // phi(d) columns of length phi(n)
  std::vector<unsigned> pivots;                // phi(d) rows
  std::vector<std::vector<Rational>> pivot_inverse;
};

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) throw Error(Errc::internal, "singular embedding block");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < m; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

const Embedding& embedding(unsigned n, unsigned d) {
  thread_local std::map<std::pair<unsigned, unsigned>, Embedding> cache;
  auto key = std::make_pair(n, d);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Embedding e;
  const unsigned phin = field(n).phi, phid = field(d).phi, step = n / d;
  for (unsigned j = 0; j < phid; ++j) {
    std::vector<Rational> dense(static_cast<std::size_t>(j) * step + 1, Rational(0));
    dense.back() = 1;
    e.columns.push_back(reduce(n, dense));
  }
  // Greedy independent rows via incremental echelon basis.
  std::vector<std::vector<Rational>> echelon;
  std::vector<unsigned> lead;
  for (unsigned r = 0; r < phin && e.pivots.size() < phid; ++r) {
    std::vector<Rational> row(phid);
    for (unsigned j = 0; j < phid; ++j) row[j] = e.columns[j][r];
    for (std::size_t b = 0; b < echelon.size(); ++b) {
      if (row[lead[b]] == 0) continue;
      Rational f = row[lead[b]] / echelon[b][lead[b]];
      for (unsigned j = 0; j < phid; ++j) row[j] -= f * echelon[b][j];
    }
    unsigned l = 0;
    while (l < phid && row[l] == 0) ++l;
    if (l == phid) continue;
    echelon.push_back(std::move(row));
    lead.push_back(l);
    e.pivots.push_back(r);
  }
  std::vector<std::vector<Rational>> block(phid, std::vector<Rational>(phid));
  for (unsigned i = 0; i < phid; ++i)
    for (unsigned j = 0; j < phid; ++j) block[i][j] = e.columns[j][e.pivots[i]];
  e.pivot_inverse = invert(std::move(block));
  return cache.emplace(key, std::move(e)).first->second;
}

}  // namespace

Cyc Cyc::normalized(unsigned n, std::vector<Rational> v) {
  bool rational = true;
  for (std::size_t k = 1; k < v.size() && rational; ++k) rational = v[k] == 0;
  if (rational) return Cyc(v.empty() ? Rational(0) : v[0]);
  for (unsigned d = 2; d < n; ++d) {
    if (n % d) continue;
    const Embedding& e = embedding(n, d);
    const std::size_t phid = e.pivots.size();
    std::vector<Rational> c(phid, Rational(0));
    for (std::size_t i = 0; i < phid; ++i)
      for (std::size_t j = 0; j < phid; ++j) c[i] += e.pivot_inverse[i][j] * v[e.pivots[j]];
    bool ok = true;
    for (std::size_t r = 0; r < v.size() && ok; ++r) {
      Rational s = 0;
      for (std::size_t j = 0; j < phid; ++j) s += e.columns[j][r] * c[j];
      ok = s == v[r];
    }
    if (ok) return Cyc(d, std::move(c));
  }
  return Cyc(n, std::move(v));
}

std::vector<Rational> Cyc::lifted(unsigned target) const {
  if (target == conductor_) return coeffs_;
  const unsigned step = target / conductor_;
  std::vector<Rational> dense(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) dense[k * step] = coeffs_[k];
  return reduce(target, dense);
}

Cyc Cyc::root(unsigned n, long long k) {
  if (n == 0) throw Error(Errc::invalid_argument, "root of unity order must be positive");
  long long r = ((k % n) + n) % n;
  std::vector<Rational> dense(static_cast<std::size_t>(r) + 1, Rational(0));
  dense.back() = 1;
  return normalized(n, reduce(n, dense));
}

Cyc Cyc::from_powers(unsigned n, const std::vector<Rational>& dense) {
  if (n == 0) throw Error(Errc::invalid_argument, "root of unity order must be positive");
  return normalized(n, reduce(n, dense));
}

const Rational& Cyc::rational() const {
  if (!is_rational())
    throw Error(Errc::invalid_argument, "value of conductor " + std::to_string(conductor_) + " is not rational");
  return coeffs_[0];
}

Cyc Cyc::galois(long long a) const {
  if (conductor_ <= 2) return *this;
  const long long n = conductor_;
  long long am = ((a % n) + n) % n;
  if (std::gcd(am, n) != 1) throw Error(Errc::invalid_argument, "Galois exponent not coprime to conductor");
  std::vector<Rational> dense(conductor_, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    dense[(static_cast<long long>(k) * am) % n] += coeffs_[k];
  return normalized(conductor_, reduce(conductor_, dense));
}


Cyc Cyc::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (is_rational()) return Cyc(Rational(1) / coeffs_[0]);
  Cyc prod(1);
  for (unsigned a = 2; a < conductor_; ++a)
    if (std::gcd(a, conductor_) == 1) prod *= galois(a);
  Rational norm = (*this * prod).rational();
  return prod * Cyc(Rational(1) / norm);
}

Cyc& Cyc::operator+=(const Cyc& o) {
  const unsigned l = std::lcm(conductor_, o.conductor_);
  auto a = lifted(l);
  auto b = o.lifted(l);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  *this = normalized(l, std::move(a));
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (o.is_rational()) {
    if (o.coeffs_[0] == 0) return *this = Cyc();
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    *this = o;
    return *this *= Cyc(s);
  }
  const unsigned l = std::lcm(conductor_, o.conductor_);
  auto a = lifted(l);
  auto b = o.lifted(l);
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  *this = normalized(l, reduce(l, prod));
  return *this;
}

std::optional<Rational> Cyc::root_angle() const {
  if (is_rational()) {
    if (coeffs_[0] == 1) return Rational(0);
    if (coeffs_[0] == -1) return Rational(1, 2);
    return std::nullopt;
  }
  if (!(abs2() == Cyc(1L))) return std::nullopt;
  const unsigned m = std::lcm(2u, conductor_);
  for (unsigned k = 0; k < m; ++k) {
    if (root(m, k) == *this) {
      Rational a(k, m);
      a.canonicalize();
      return a;
    }
  }
  return std::nullopt;
}

std::string Cyc::to_string() const {
  if (is_rational()) return quasi::to_string(coeffs_[0]);
  if (auto angle = root_angle()) {
    const std::string n = angle->get_den().get_str();
    const std::string k = angle->get_num().get_str();
    return k == "1" ? "E(" + n + ")" : "E(" + n + ")^" + k;
  }
  std::string out;
  const std::string base = "E(" + std::to_string(conductor_) + ")";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    std::string term;
    std::string mag = quasi::to_string(abs(c));
    if (k == 0) {
      term = mag;
    } else {
      term = (mag == "1" ? "" : mag + "*") + base + (k == 1 ? "" : "^" + std::to_string(k));
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? "-" : "+") + term;
  }
  return out;
}

std::optional<unsigned> as_root_of_unity(const Cyc& c, unsigned l) {
  if (l == 0) throw Error(Errc::invalid_argument, "root of unity order must be positive");
  auto angle = c.root_angle();
  if (!angle) return std::nullopt;
  Rational m = *angle * l;
  if (m.get_den() != 1) return std::nullopt;
  unsigned v = static_cast<unsigned>(m.get_num().get_ui());
  return v == 0 ? l : v;
}

std::strong_ordering display_order(const Cyc& a, const Cyc& b) {
  auto ra = a.root_angle();
  auto rb = b.root_angle();
  if (ra && rb) {
    if (*ra < *rb) return std::strong_ordering::less;
    if (*rb < *ra) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  if (ra) return std::strong_ordering::less;
  if (rb) return std::strong_ordering::greater;
  if (a.conductor() != b.conductor()) return a.conductor() <=> b.conductor();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k] > b.coeffs()[k]) return std::strong_ordering::less;
    if (a.coeffs()[k] < b.coeffs()[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace quasi
