#include "grassline/adhm.hpp"

#include <algorithm>
#include <random>

#include "grassline/linalg.hpp"
#include "grassline/polystring.hpp"

namespace grassline {

// ---------------------------------------------------------------- dimension vectors

DimVectorA::DimVectorA(const std::map<int, int>& v) {
  for (const auto& [i, x] : v) {
    if (x < 0) throw Error(ErrorCode::InvalidDatum, "negative dimension at vertex " + std::to_string(i));
    if (x > 0) v_[i] = x;
  }
}

int DimVectorA::operator[](int i) const {
  auto it = v_.find(i);
  return it == v_.end() ? 0 : it->second;
}

int DimVectorA::lo() const { return v_.empty() ? 0 : std::min(0, v_.begin()->first); }
int DimVectorA::hi() const { return v_.empty() ? 0 : std::max(0, v_.rbegin()->first); }

int DimVectorA::total() const {
  int n = 0;
  for (const auto& [i, x] : v_) n += x;
  return n;
}

DimVectorA DimVectorA::flipped() const {
  std::map<int, int> out;
  for (const auto& [i, x] : v_) out[-i] = x;
  return DimVectorA(out);
}

int DimVectorD::at(int i) const {
  auto it = v.find(i);
  return it == v.end() ? 0 : it->second;
}

int DimVectorD::top() const {
  int t = 0;
  for (const auto& [i, x] : v)
    if (x > 0) t = std::max(t, i);
  return t;
}

void DimVectorD::validate() const {
  if (v0_plus < 0 || v0_minus < 0) throw Error(ErrorCode::InvalidDatum, "negative dimension at vertex 0");
  for (const auto& [i, x] : v) {
    if (i < 1) throw Error(ErrorCode::InvalidDatum, "D-type vertices beyond 0 start at 1");
    if (x < 0) throw Error(ErrorCode::InvalidDatum, "negative dimension at vertex " + std::to_string(i));
  }
}

DimVectorA framing_A(int r) { return DimVectorA(std::map<int, int>{{0, r}}); }

DimVectorD framing_D(int r) {
  DimVectorD w;
  w.v0_plus = r;
  return w;
}

DimVectorA v_from_lambda(const Coweight& lambda) {
  std::map<int, int> v;
  const int top = std::max(lambda[0], 0);
  const int bottom = std::min(lambda[lambda.rank() - 1], 0);
  for (int i = bottom; i <= top; ++i) {
    int x = 0;
    for (int s : lambda.entries()) x += i >= 0 ? std::max(s - i, 0) : std::max(i - s, 0);
    if (x > 0) v[i] = x;
  }
  return DimVectorA(v);
}

Coweight lambda_from_v(const DimVectorA& v, int r) {
  if (r <= 0) throw Error(ErrorCode::InvalidCoweight, "rank must be positive");
  std::vector<int> out;
  long weight = 0;
  for (int i = v.lo() - 1; i <= v.hi() + 1; ++i) {
    const int m = (i == 0 ? r : 0) - 2 * v[i] + v[i - 1] + v[i + 1];
    if (m < 0) throw Error(ErrorCode::NegativeMultiplicity, "m_" + std::to_string(i) + " = " + std::to_string(m));
    for (int c = 0; c < m; ++c) out.push_back(i);
    weight += static_cast<long>(i) * m;
  }
  if (weight != 0) throw Error(ErrorCode::NonzeroTotalWeight, "sum of i*m_i is " + std::to_string(weight));
  std::sort(out.rbegin(), out.rend());
  return Coweight(out);
}

int chern_number(const DimVectorA& v) { return v.total(); }

std::vector<XiClass> xi_enumerate(const Coweight& lambda) {
  std::vector<XiClass> out;
  if (!is_symmetric(lambda)) return out;
  const int m0 = multiplicity(lambda, 0);
  for (int plus = m0; plus >= 0; --plus) {
    XiClass c{lambda, plus, m0 - plus};
    if (satisfies_pair_constraints(c)) out.push_back(c);
  }
  return out;
}

std::optional<DimVectorD> vD_from_xi(const XiClass& xi) {
  if (!is_symmetric(xi.lambda) || !satisfies_pair_constraints(xi))
    throw Error(ErrorCode::IntegralityViolation, "not a valid ordered pair for this coweight");
  const DimVectorA va = v_from_lambda(xi.lambda);
  const int r = static_cast<int>(xi.lambda.rank());
  const int v1 = va[1];
  if (xi.m_minus > v1) return std::nullopt;
  if ((r - xi.m_plus + v1) % 2 != 0 || (v1 - xi.m_minus) % 2 != 0)
    throw Error(ErrorCode::IntegralityViolation, "v_{0,+} or v_{0,-} is not an integer");
  DimVectorD d;
  d.v0_plus = (r - xi.m_plus + v1) / 2;
  d.v0_minus = (v1 - xi.m_minus) / 2;
  for (const auto& [i, x] : va.entries())
    if (i >= 1) d.v[i] = x;
  return d;
}

std::optional<std::map<int, int>> tau_multiplicities(const DimVectorA& v, int r) {
  std::map<int, int> out;
  for (int i = v.lo() - 1; i <= v.hi() + 1; ++i) {
    const int m = (i == 0 ? r : 0) - 2 * v[i] + v[i - 1] + v[i + 1];
    if (m < 0) return std::nullopt;
    if (m > 0) out[i] = m;
  }
  return out;
}

std::optional<MultiplicitiesD> tau_multiplicities(const DimVectorD& v, int r) {
  v.validate();
  MultiplicitiesD out;
  out.m0_plus = r - 2 * v.v0_plus + v.at(1);
  out.m0_minus = -2 * v.v0_minus + v.at(1);
  if (out.m0_plus < 0 || out.m0_minus < 0) return std::nullopt;
  for (int i = 1; i <= v.top() + 1; ++i) {
    const int below = i == 1 ? v.v0_plus + v.v0_minus : v.at(i - 1);
    const int m = -2 * v.at(i) + below + v.at(i + 1);
    if (m < 0) return std::nullopt;
    if (m > 0) out.m[i] = m;
  }
  return out;
}

long quiver_dim(const DimVectorA& v, const DimVectorA& w) {
  long pairing = 0, cartan = 0;
  for (const auto& [i, x] : v.entries()) {
    pairing += static_cast<long>(x) * w[i];
    cartan += static_cast<long>(x) * (2 * x - v[i - 1] - v[i + 1]);
  }
  return 2 * pairing - cartan;
}

long quiver_dim(const DimVectorD& v, const DimVectorD& w) {
  v.validate();
  w.validate();
  long pairing = static_cast<long>(v.v0_plus) * w.v0_plus + static_cast<long>(v.v0_minus) * w.v0_minus;
  for (const auto& [i, x] : v.v) pairing += static_cast<long>(x) * w.at(i);
  long cartan = static_cast<long>(v.v0_plus) * (2 * v.v0_plus - v.at(1)) +
                static_cast<long>(v.v0_minus) * (2 * v.v0_minus - v.at(1));
  for (const auto& [i, x] : v.v) {
    const int below = i == 1 ? v.v0_plus + v.v0_minus : v.at(i - 1);
    cartan += static_cast<long>(x) * (2 * x - below - v.at(i + 1));
  }
  return 2 * pairing - cartan;
}

// ---------------------------------------------------------------- data

namespace {

bool has_shape(const QMatrix& m, int rows, int cols) {
  return static_cast<int>(m.rows()) == rows && static_cast<int>(m.cols()) == cols;
}

const QMatrix& lookup(const std::map<int, QMatrix>& m, int k, const QMatrix& fallback) {
  auto it = m.find(k);
  return it == m.end() ? fallback : it->second;
}

QMatrix get_or_zero(const std::map<int, QMatrix>& m, int k, int rows, int cols) {
  auto it = m.find(k);
  if (it != m.end()) return it->second;
  return QMatrix(rows, cols);
}

std::optional<std::string> shape_problem_A(const AdhmDatumA& d) {
  const DimVectorA& v = d.dims;
  if (d.r < 0) return "negative framing rank";
  if (!has_shape(d.i_map, v[0], d.r)) return "i has the wrong shape";
  if (!has_shape(d.j_map, d.r, v[0])) return "j has the wrong shape";
  for (int k = v.lo(); k <= v.hi(); ++k) {
    auto b1 = d.b1.find(k);
    auto b2 = d.b2.find(k);
    if (b1 == d.b1.end() || !has_shape(b1->second, v[k - 1], v[k])) return "B1 at degree " + std::to_string(k);
    if (b2 == d.b2.end() || !has_shape(b2->second, v[k + 1], v[k])) return "B2 at degree " + std::to_string(k);
  }
  for (const auto& [k, m] : d.b1)
    if ((k < v.lo() || k > v.hi()) && !m.is_zero()) return "B1 outside the support";
  for (const auto& [k, m] : d.b2)
    if ((k < v.lo() || k > v.hi()) && !m.is_zero()) return "B2 outside the support";
  return std::nullopt;
}

std::optional<std::string> shape_problem_D(const AdhmDatumD& d) {
  try {
    d.dims.validate();
  } catch (const Error& e) {
    return std::string(e.what());
  }
  const DimVectorD& v = d.dims;
  const int v1 = v.at(1);
  if (!has_shape(d.b1_plus, v.v0_plus, v1)) return "B1+ has the wrong shape";
  if (!has_shape(d.b1_minus, v.v0_minus, v1)) return "B1- has the wrong shape";
  if (!has_shape(d.b2_plus, v1, v.v0_plus)) return "B2+ has the wrong shape";
  if (!has_shape(d.b2_minus, v1, v.v0_minus)) return "B2- has the wrong shape";
  if (!has_shape(d.i_map, v.v0_plus, d.r)) return "i has the wrong shape";
  if (!has_shape(d.j_map, d.r, v.v0_plus)) return "j has the wrong shape";
  for (int k = 1; k <= v.top(); ++k) {
    auto b1 = d.b1.find(k);
    auto b2 = d.b2.find(k);
    if (b1 == d.b1.end() || !has_shape(b1->second, v.at(k), v.at(k + 1))) return "B1 at degree " + std::to_string(k);
    if (b2 == d.b2.end() || !has_shape(b2->second, v.at(k + 1), v.at(k))) return "B2 at degree " + std::to_string(k);
  }
  for (const auto& [k, m] : d.b1)
    if ((k < 1 || k > v.top()) && !m.is_zero()) return "B1 outside the support";
  for (const auto& [k, m] : d.b2)
    if ((k < 1 || k > v.top()) && !m.is_zero()) return "B2 outside the support";
  return std::nullopt;
}

void check_zero(VerifyReport& rep, const std::string& name, const QMatrix& m) {
  if (m.is_zero()) rep.add(name, true);
  else rep.add(name, false, "residual " + format_matrix(m));
}

void require_valid(const VerifyReport& rep) {
  for (const auto& c : rep.checks)
    if (!c.pass) throw Error(ErrorCode::InvalidDatum, c.name + (c.witness ? ": " + *c.witness : ""));
}

}  // namespace

AdhmDatumA AdhmDatumA::zero(int r, const DimVectorA& dims) {
  AdhmDatumA d;
  d.r = r;
  d.dims = dims;
  for (int k = dims.lo(); k <= dims.hi(); ++k) {
    d.b1[k] = QMatrix(dims[k - 1], dims[k]);
    d.b2[k] = QMatrix(dims[k + 1], dims[k]);
  }
  d.i_map = QMatrix(dims[0], r);
  d.j_map = QMatrix(r, dims[0]);
  return d;
}

std::size_t AdhmDatumA::offset(int k) const {
  std::size_t off = 0;
  for (int m = dims.lo(); m < k; ++m) off += dims[m];
  return off;
}

AdhmQuad AdhmDatumA::ungraded() const {
  if (auto p = shape_problem_A(*this)) throw Error(ErrorCode::InvalidDatum, *p);
  const std::size_t n = dims.total();
  AdhmQuad q{QMatrix(n, n), QMatrix(n, n), QMatrix(n, r), QMatrix(r, n)};
  for (int k = dims.lo(); k <= dims.hi(); ++k) {
    if (k - 1 >= dims.lo()) q.b1.set_block(offset(k - 1), offset(k), b1.at(k));
    if (k + 1 <= dims.hi()) q.b2.set_block(offset(k + 1), offset(k), b2.at(k));
  }
  q.i.set_block(offset(0), 0, i_map);
  q.j.set_block(0, offset(0), j_map);
  return q;
}

AdhmDatumD AdhmDatumD::zero(int r, const DimVectorD& dims) {
  dims.validate();
  AdhmDatumD d;
  d.r = r;
  d.dims = dims;
  const int v1 = dims.at(1);
  d.b1_plus = QMatrix(dims.v0_plus, v1);
  d.b1_minus = QMatrix(dims.v0_minus, v1);
  d.b2_plus = QMatrix(v1, dims.v0_plus);
  d.b2_minus = QMatrix(v1, dims.v0_minus);
  for (int k = 1; k <= dims.top(); ++k) {
    d.b1[k] = QMatrix(dims.at(k), dims.at(k + 1));
    d.b2[k] = QMatrix(dims.at(k + 1), dims.at(k));
  }
  d.i_map = QMatrix(dims.v0_plus, r);
  d.j_map = QMatrix(r, dims.v0_plus);
  return d;
}

VerifyReport validate(const AdhmDatumA& d) {
  VerifyReport rep;
  if (auto p = shape_problem_A(d)) {
    rep.add("shapes", false, *p);
    return rep;
  }
  rep.add("shapes", true);
  const AdhmQuad q = d.ungraded();
  const QMatrix m = q.b1 * q.b2 - q.b2 * q.b1 + q.i * q.j;
  for (int k = d.dims.lo(); k <= d.dims.hi(); ++k) {
    if (d.dims[k] == 0) continue;
    check_zero(rep, "adhm@" + std::to_string(k), m.block(d.offset(k), d.offset(k), d.dims[k], d.dims[k]));
  }
  return rep;
}

VerifyReport validate(const AdhmDatumD& d) {
  VerifyReport rep;
  if (auto p = shape_problem_D(d)) {
    rep.add("shapes", false, *p);
    return rep;
  }
  rep.add("shapes", true);
  const DimVectorD& v = d.dims;
  check_zero(rep, "type_d@0+", Rational(2) * (d.b1_plus * d.b2_plus) + d.i_map * d.j_map);
  check_zero(rep, "type_d@0-", d.b1_minus * d.b2_minus);
  if (v.top() >= 1) {
    const QMatrix b1 = get_or_zero(d.b1, 1, v.at(1), v.at(2));
    const QMatrix b2 = get_or_zero(d.b2, 1, v.at(2), v.at(1));
    check_zero(rep, "type_d@1", b1 * b2 - d.b2_plus * d.b1_plus - d.b2_minus * d.b1_minus);
  }
  for (int k = 2; k <= v.top(); ++k) {
    const QMatrix lhs = d.b1.at(k) * d.b2.at(k);
    const QMatrix rhs = d.b2.at(k - 1) * d.b1.at(k - 1);
    check_zero(rep, "type_d@" + std::to_string(k), lhs - rhs);
  }
  return rep;
}

Stability stability(const AdhmQuad& q) {
  const std::size_t n = q.n();
  if (n == 0) return {true, true};
  // Smallest subspace containing im(i) and stable under B1, B2.
  QMatrix span = column_basis(q.i);
  for (;;) {
    const std::size_t before = span.cols();
    if (before == n) break;
    span = column_basis(hstack(hstack(span, q.b1 * span), q.b2 * span));
    if (span.cols() == before) break;
  }
  const bool costable = span.cols() == n;
  // Largest subspace inside ker(j) stable under B1, B2 is ker(constraints).
  QMatrix constraints = column_basis(q.j.transpose()).transpose();
  for (;;) {
    const std::size_t before = constraints.rows();
    if (before == n) break;
    constraints = vstack(vstack(constraints, constraints * q.b1), constraints * q.b2);
    constraints = column_basis(constraints.transpose()).transpose();
    if (constraints.rows() == before) break;
  }
  const bool stable = constraints.rows() == n;
  return {stable, costable};
}

Stability stability(const AdhmDatumA& d) {
  require_valid(validate(d));
  return stability(d.ungraded());
}

Stability stability(const AdhmDatumD& d) {
  require_valid(validate(d));
  return stability(expand(d).ungraded());
}

AdhmQuad act_gl2(const AdhmQuad& q, const QMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "act_gl2 needs a 2x2 matrix");
  const Rational det = determinant(m);
  if (is_zero(det)) throw Error(ErrorCode::SingularMatrix, "act_gl2 needs an invertible matrix");
  const Rational &alpha = m(0, 0), &beta = m(0, 1), &gamma = m(1, 0), &delta = m(1, 1);
  return {alpha * q.b1 + gamma * q.b2, beta * q.b1 + delta * q.b2, det * q.i, q.j};
}

AdhmQuad act_gl_v(const AdhmQuad& q, const QMatrix& g) {
  const QMatrix ginv = inverse(g);
  return {g * q.b1 * ginv, g * q.b2 * ginv, g * q.i, q.j * ginv};
}

AdhmDatumA dagger(const AdhmDatumA& d) {
  require_valid(validate(d));
  AdhmDatumA out;
  out.r = d.r;
  out.dims = d.dims.flipped();
  for (int k = out.dims.lo(); k <= out.dims.hi(); ++k) {
    out.b1[k] = -d.b2.at(-k);
    out.b2[k] = d.b1.at(-k);
  }
  out.i_map = d.i_map;
  out.j_map = d.j_map;
  return out;
}

AdhmDatumA expand(const AdhmDatumD& d) {
  if (auto p = shape_problem_D(d)) throw Error(ErrorCode::InvalidDatum, *p);
  const DimVectorD& v = d.dims;
  const int top = v.top();
  std::map<int, int> dims;
  dims[0] = v.v0_plus + v.v0_minus;
  for (const auto& [k, x] : v.v) {
    dims[k] = x;
    dims[-k] = x;
  }
  AdhmDatumA out = AdhmDatumA::zero(d.r, DimVectorA(dims));
  // rho on V_0 is +1 on V_{0,+} and -1 on V_{0,-}; on V_k (k > 0) it is the
  // identity onto V_{-k}, so rho^2 = (-1)^k on V_k.
  QMatrix rho0 = QMatrix::identity(dims[0]);
  for (int s = v.v0_plus; s < dims[0]; ++s) rho0(s, s) = -1;

  const QMatrix empty;
  for (int k = 1; k <= top; ++k) {
    out.b1[k + 1] = lookup(d.b1, k, empty);
    out.b2[k] = lookup(d.b2, k, empty);
  }
  if (top >= 1 || dims[0] > 0) {
    out.b1[1] = vstack(d.b1_plus, d.b1_minus);
    out.b2[0] = hstack(d.b2_plus, d.b2_minus);
  }
  // B1 = -rho B2 rho^-1 and B2 = rho B1 rho^-1 on the negative side.
  out.b1[0] = -(out.b2[0] * rho0);
  for (int k = 1; k <= top; ++k) out.b1[-k] = -out.b2[k];
  if (top >= 1) out.b2[-1] = rho0 * out.b1[1];
  for (int k = 2; k <= top; ++k) out.b2[-k] = out.b1[k];

  out.i_map = vstack(d.i_map, QMatrix(v.v0_minus, d.r));
  out.j_map = hstack(d.j_map, QMatrix(d.r, v.v0_minus));
  // Drop blocks that fall outside the support of the expanded vector.
  for (auto it = out.b1.begin(); it != out.b1.end();)
    it = (it->first < out.dims.lo() || it->first > out.dims.hi()) ? out.b1.erase(it) : std::next(it);
  for (auto it = out.b2.begin(); it != out.b2.end();)
    it = (it->first < out.dims.lo() || it->first > out.dims.hi()) ? out.b2.erase(it) : std::next(it);
  return out;
}

LaurentMatrix1 theta_series(const AdhmQuad& q) {
  const std::size_t r = q.r();
  LaurentMatrix1 out = LaurentMatrix1::identity(r);
  QMatrix b1k = QMatrix::identity(q.n());
  QMatrix b2k = QMatrix::identity(q.n());
  for (std::size_t k = 0; k <= q.n(); ++k) {
    if (k > 0) {
      b1k = q.b1 * b1k;
      b2k = q.b2 * b2k;
    }
    if (b1k.is_zero()) break;
    const QMatrix c = q.j * b2k * b1k * q.i;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) out(a, b) += tpow(-static_cast<int>(k) - 1, c(a, b));
  }
  if (q.n() > 0 && !b1k.is_zero()) throw Error(ErrorCode::InvalidDatum, "B1 is not nilpotent");
  return out;
}

LoopElement theta_psi_A(const AdhmDatumA& d) {
  require_valid(validate(d));
  const AdhmQuad q = d.ungraded();
  const Stability s = stability(q);
  if (!s.stable || !s.costable) throw Error(ErrorCode::NotStableCostable, "datum is not stable and costable");
  return LoopElement(theta_series(q));
}

LoopElement theta_psi_D(const AdhmDatumD& d) {
  require_valid(validate(d));
  const Stability s = stability(expand(d).ungraded());
  if (!s.stable || !s.costable) throw Error(ErrorCode::NotStableCostable, "expanded datum is not stable and costable");
  const std::size_t r = d.r;
  const DimVectorD& v = d.dims;
  LaurentMatrix1 out = LaurentMatrix1::identity(r);
  const auto add = [&](const QMatrix& c, int power) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) out(a, b) += tpow(power, c(a, b));
  };
  add(d.j_map * d.i_map, -1);
  // up: V_1 -> V_{k+1} (B2^k), down: V_{k+1} -> V_1 (B1^k)
  QMatrix up = QMatrix::identity(v.at(1));
  QMatrix down = QMatrix::identity(v.at(1));
  for (int k = 0; k <= v.top(); ++k) {
    if (k > 0) {
      up = d.b2.at(k) * up;
      down = down * d.b1.at(k);
    }
    const QMatrix c = d.j_map * d.b1_plus * down * up * d.b2_plus * d.i_map;
    add(k % 2 == 0 ? -c : c, -k - 2);
  }
  return LoopElement(out);
}

MonadMaps monad_maps(const AdhmQuad& q, const std::array<Rational, 3>& z) {
  const std::size_t n = q.n(), r = q.r();
  const QMatrix id = QMatrix::identity(n);
  const QMatrix x1 = z[0] * q.b1 - z[1] * id;
  const QMatrix x2 = z[0] * q.b2 - z[2] * id;
  MonadMaps m{QMatrix(2 * n + r, n), QMatrix(n, 2 * n + r)};
  m.a.set_block(0, 0, x1);
  m.a.set_block(n, 0, x2);
  m.a.set_block(2 * n, 0, z[0] * q.j);
  m.b.set_block(0, 0, -x2);
  m.b.set_block(0, n, x1);
  m.b.set_block(0, 2 * n, z[0] * q.i);
  return m;
}

SymbolicMonad monad_maps_symbolic(const AdhmQuad& q) {
  const std::size_t n = q.n(), r = q.r();
  const Poly3 z0 = Poly3::monomial({1, 0, 0}), z1 = Poly3::monomial({0, 1, 0}), z2 = Poly3::monomial({0, 0, 1});
  const auto lift = [](const QMatrix& m) { return to_laurent<3>(m); };
  const Matrix<Poly3> id = Matrix<Poly3>::identity(n);
  const Matrix<Poly3> x1 = z0 * lift(q.b1) - z1 * id;
  const Matrix<Poly3> x2 = z0 * lift(q.b2) - z2 * id;
  SymbolicMonad m{Matrix<Poly3>(2 * n + r, n), Matrix<Poly3>(n, 2 * n + r)};
  m.a.set_block(0, 0, x1);
  m.a.set_block(n, 0, x2);
  m.a.set_block(2 * n, 0, z0 * lift(q.j));
  m.b.set_block(0, 0, -x2);
  m.b.set_block(0, n, x1);
  m.b.set_block(0, 2 * n, z0 * lift(q.i));
  return m;
}

// ---------------------------------------------------------------- sampling

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  // Small rationals: numerators in [-2, 2], denominators 1 or 2.
  Rational small_rational() {
    const int num = integer(-2, 2);
    const int den = integer(0, 2) == 0 ? 2 : 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  QMatrix matrix(std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational();
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

// Homogeneous linear system in the entries of several unknown matrices.
class LinearSystem {
 public:
  struct Var {
    std::size_t offset, rows, cols;
    std::size_t at(std::size_t i, std::size_t j) const { return offset + i * cols + j; }
  };
  struct Eq {
    std::size_t offset, rows, cols;
    std::size_t at(std::size_t i, std::size_t j) const { return offset + i * cols + j; }
  };

  Var unknown(std::size_t rows, std::size_t cols) {
    Var v{nvars_, rows, cols};
    nvars_ += rows * cols;
    return v;
  }
  Eq equation(std::size_t rows, std::size_t cols) {
    Eq e{neqs_, rows, cols};
    neqs_ += rows * cols;
    return e;
  }
  // e += c * X * K
  void unknown_known(const Eq& e, const Var& x, const QMatrix& k, const Rational& c) {
    for (std::size_t p = 0; p < x.rows; ++p)
      for (std::size_t q = 0; q < k.cols(); ++q)
        for (std::size_t m = 0; m < x.cols; ++m)
          if (!is_zero(k(m, q))) coeff_[{e.at(p, q), x.at(p, m)}] += c * k(m, q);
  }
  // e += c * K * X
  void known_unknown(const Eq& e, const QMatrix& k, const Var& x, const Rational& c) {
    for (std::size_t p = 0; p < k.rows(); ++p)
      for (std::size_t q = 0; q < x.cols; ++q)
        for (std::size_t m = 0; m < x.rows; ++m)
          if (!is_zero(k(p, m))) coeff_[{e.at(p, q), x.at(m, q)}] += c * k(p, m);
  }
  // A random point of the solution space.
  std::vector<Rational> random_solution(Draw& draw) const {
    QMatrix a(neqs_, nvars_);
    for (const auto& [rc, c] : coeff_) a(rc.first, rc.second) = c;
    const QMatrix basis = nullspace(a);
    std::vector<Rational> x(nvars_);
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      const Rational c = draw.integer(-3, 3);
      if (is_zero(c)) continue;
      for (std::size_t i = 0; i < nvars_; ++i) x[i] += c * basis(i, k);
    }
    return x;
  }
  static QMatrix read(const Var& v, const std::vector<Rational>& x) {
    QMatrix m(v.rows, v.cols);
    for (std::size_t i = 0; i < v.rows; ++i)
      for (std::size_t j = 0; j < v.cols; ++j) m(i, j) = x[v.at(i, j)];
    return m;
  }

 private:
  std::size_t nvars_ = 0;
  std::size_t neqs_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> coeff_;
};

}  // namespace

AdhmDatumA sample_datum(const Coweight& lambda, std::uint64_t seed, const SampleOptions& opts) {
  const int r = static_cast<int>(lambda.rank());
  const DimVectorA v = v_from_lambda(lambda);
  AdhmDatumA d = AdhmDatumA::zero(r, v);
  if (v.is_zero()) return d;
  Draw draw(seed);
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    // B2 and j are drawn; B1 and i solve the (then linear) component equations.
    for (int k = v.lo(); k <= v.hi(); ++k) d.b2[k] = draw.matrix(v[k + 1], v[k]);
    d.j_map = draw.matrix(r, v[0]);
    LinearSystem sys;
    std::map<int, LinearSystem::Var> b1;
    for (int k = v.lo(); k <= v.hi(); ++k) b1[k] = sys.unknown(v[k - 1], v[k]);
    const LinearSystem::Var iv = sys.unknown(v[0], r);
    for (int k = v.lo(); k <= v.hi(); ++k) {
      const LinearSystem::Eq e = sys.equation(v[k], v[k]);
      if (k + 1 <= v.hi()) sys.unknown_known(e, b1.at(k + 1), d.b2.at(k), 1);
      if (k - 1 >= v.lo()) sys.known_unknown(e, d.b2.at(k - 1), b1.at(k), -1);
      if (k == 0) sys.unknown_known(e, iv, d.j_map, 1);
    }
    const std::vector<Rational> x = sys.random_solution(draw);
    for (int k = v.lo(); k <= v.hi(); ++k) d.b1[k] = LinearSystem::read(b1.at(k), x);
    d.i_map = LinearSystem::read(iv, x);
    if (!validate(d).ok()) continue;
    const Stability s = stability(d.ungraded());
    if (s.stable && s.costable) return d;
  }
  throw Error(ErrorCode::SamplingExhausted, "no stable and costable datum after " + std::to_string(opts.retries) + " draws");
}

AdhmDatumD sample_datum(const XiClass& xi, std::uint64_t seed, const SampleOptions& opts) {
  const std::optional<DimVectorD> dims = vD_from_xi(xi);
  if (!dims) throw Error(ErrorCode::InvalidDatum, "the class has no quiver datum (m_minus > v_1)");
  const DimVectorD& v = *dims;
  const int r = static_cast<int>(xi.lambda.rank());
  const int top = v.top();
  AdhmDatumD d = AdhmDatumD::zero(r, v);
  Draw draw(seed);
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    d.b2_plus = draw.matrix(v.at(1), v.v0_plus);
    d.b2_minus = draw.matrix(v.at(1), v.v0_minus);
    for (int k = 1; k <= top; ++k) d.b2[k] = draw.matrix(v.at(k + 1), v.at(k));
    d.j_map = draw.matrix(r, v.v0_plus);

    LinearSystem sys;
    const auto b1p = sys.unknown(v.v0_plus, v.at(1));
    const auto b1m = sys.unknown(v.v0_minus, v.at(1));
    std::map<int, LinearSystem::Var> b1;
    for (int k = 1; k <= top; ++k) b1[k] = sys.unknown(v.at(k), v.at(k + 1));
    const auto iv = sys.unknown(v.v0_plus, r);

    const auto e0p = sys.equation(v.v0_plus, v.v0_plus);
    sys.unknown_known(e0p, b1p, d.b2_plus, 2);
    sys.unknown_known(e0p, iv, d.j_map, 1);
    const auto e0m = sys.equation(v.v0_minus, v.v0_minus);
    sys.unknown_known(e0m, b1m, d.b2_minus, 1);
    if (top >= 1) {
      const auto e1 = sys.equation(v.at(1), v.at(1));
      sys.unknown_known(e1, b1.at(1), d.b2.at(1), 1);
      sys.known_unknown(e1, d.b2_plus, b1p, -1);
      sys.known_unknown(e1, d.b2_minus, b1m, -1);
    }
    for (int k = 2; k <= top; ++k) {
      const auto e = sys.equation(v.at(k), v.at(k));
      sys.unknown_known(e, b1.at(k), d.b2.at(k), 1);
      sys.known_unknown(e, d.b2.at(k - 1), b1.at(k - 1), -1);
    }
    const std::vector<Rational> x = sys.random_solution(draw);
    d.b1_plus = LinearSystem::read(b1p, x);
    d.b1_minus = LinearSystem::read(b1m, x);
    for (int k = 1; k <= top; ++k) d.b1[k] = LinearSystem::read(b1.at(k), x);
    d.i_map = LinearSystem::read(iv, x);
    if (!validate(d).ok()) continue;
    const Stability s = stability(expand(d).ungraded());
    if (s.stable && s.costable) return d;
  }
  throw Error(ErrorCode::SamplingExhausted, "no stable and costable datum after " + std::to_string(opts.retries) + " draws");
}

}  // namespace grassline
