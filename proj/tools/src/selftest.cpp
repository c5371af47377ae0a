#include "grassline/tools/selftest.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "grassline/linalg.hpp"
#include "grassline/polystring.hpp"
#include "grassline/sl2lab.hpp"
#include "grassline/snf.hpp"
#include "grassline/tools/generators.hpp"

namespace grassline::tools {

namespace {

class Collector {
 public:
  explicit Collector(SuiteResult& out) : out_(out) {}

  void check(const std::string& name, bool pass, const std::string& witness = "") {
    ++out_.checks_run;
    if (!pass) out_.failures.push_back({name, false, witness.empty() ? std::nullopt : std::optional(witness)});
  }
  void report(const std::string& prefix, const VerifyReport& rep) {
    for (const auto& c : rep.checks) {
      ++out_.checks_run;
      if (!c.pass) out_.failures.push_back({prefix + c.name, false, c.witness});
    }
  }
  // One case; an exception counts as a failed check.
  void run_case(const std::string& name, const std::function<void()>& body) {
    ++out_.cases;
    try {
      body();
    } catch (const std::exception& e) {
      ++out_.checks_run;
      out_.failures.push_back({name, false, std::string(e.what())});
    }
  }

 private:
  SuiteResult& out_;
};

std::string show(const LoopElement& g) { return format_matrix(g.matrix(), kVarT); }

std::string show(const Coweight& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.rank(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

std::string show(const FixedClass& c) {
  return show(c.lambda) + " m+=" + std::to_string(c.m_plus) + " m-=" + std::to_string(c.m_minus);
}

LaurentMatrix1 poly1_matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
  LaurentMatrix1 m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* e : row) m(i, j++) = parse_poly<1>(e, kVarT);
    ++i;
  }
  return m;
}

LaurentMatrix2 poly2_matrix(std::initializer_list<std::initializer_list<const char*>> rows, const VarNames<2>& v) {
  LaurentMatrix2 m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* e : row) m(i, j++) = parse_poly<2>(e, v);
    ++i;
  }
  return m;
}

QMatrix qmatrix(std::initializer_list<std::initializer_list<int>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

int sum_squares(const Coweight& c) {
  int s = 0;
  for (int x : c.entries()) s += x * x;
  return s;
}

// Coweights of rank 2..max_rank with sum of squares at most bound.
std::vector<Coweight> small_coweights(std::size_t max_rank, int bound, bool include_zero) {
  std::vector<Coweight> out;
  for (std::size_t r = 2; r <= max_rank; ++r)
    for (const Coweight& c : dominant_coweights(r, 4))
      if (sum_squares(c) <= bound && (include_zero || !c.is_zero())) out.push_back(c);
  return out;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t k) { return seed * 1000003ULL + k; }

// ---------------------------------------------------------------- 1

void worked_examples(Collector& c, const SelftestOptions& opts) {
  const LoopElement gamma(poly1_matrix({{"1", "t^-1"}, {"0", "1"}}));
  const Factorization f(poly1_matrix({{"0", "1"}, {"-1", "t"}}), Coweight({1, -1}),
                        poly1_matrix({{"1", "0"}, {"t", "1"}}), gamma);

  c.run_case("stratum", [&] {
    const Coweight s = stratum(gamma);
    c.check("stratum", s == Coweight({1, -1}), show(s));
  });
  c.run_case("quad", [&] {
    const TransitionQuad expected{poly2_matrix({{"0", "u^-1"}, {"-u", "t"}}, kVarsTU),
                                  poly2_matrix({{"t^-1", "0"}, {"-u", "t"}}, kVarsTU),
                                  LaurentMatrix2::identity(2),
                                  poly2_matrix({{"1", "t^-1*u^-1"}, {"0", "1"}}, kVarsTU)};
    c.check("quad.build", build_quad(f) == expected);
    c.report("quad.verify.", verify_quad(expected));
    const LoopElement back = extract_quad(expected, opts.split);
    c.check("quad.extract", back == gamma, show(back));
    const LoopElement flipped = extract_quad(act_weyl(expected), opts.split);
    c.check("quad.weyl", flipped == iota(gamma), show(flipped));
  });
  c.run_case("triple", [&] {
    const TransitionTriple expected{poly2_matrix({{"s1^-1", "0"}, {"-s2", "s1"}}, kVarsS),
                                    poly2_matrix({{"0", "s2^-1"}, {"-s2", "s1"}}, kVarsS),
                                    poly2_matrix({{"1", "s1^-1*s2^-1"}, {"0", "1"}}, kVarsS)};
    c.check("triple.build", build_triple(f) == expected);
    c.report("triple.verify.", verify_triple(expected));
    const LoopElement back = extract_triple(expected);
    c.check("triple.extract", back == gamma, show(back));
  });
  c.run_case("sigma", [&] {
    const QMatrix sigma = sigma_invariant(gamma, f);
    c.check("sigma", sigma == qmatrix({{0, 1}, {-1, 0}}), format_matrix(sigma));
    const FixedClass cls = classify_fixed(gamma);
    c.check("classify", cls == FixedClass{Coweight({1, -1}), 0, 0}, show(cls));
  });
  c.run_case("sl2", [&] {
    c.report("sl2.alpha.", sl2_membership(gamma, 1));
    c.report("sl2.zero.", sl2_membership(LoopElement::identity(2), 0));
    const LoopElement sq(poly1_matrix({{"1", "t^-2"}, {"0", "1"}}));
    const VerifyReport rep = sl2_membership(sq, 2);
    bool iota_failed = false;
    for (const auto& ch : rep.checks)
      if (ch.name == "iota_fixed") iota_failed = !ch.pass;
    c.check("sl2.even_not_fixed", iota_failed);
  });
}

// ---------------------------------------------------------------- 2

void normalizer(Collector& c, const SelftestOptions& opts) {
  Generator gen(mix(opts.seed, 2));
  int index = 0;
  for (std::size_t r : {2u, 3u, 4u}) {
    for (int k = 0; k < 17; ++k, ++index) {
      const std::string name = "gamma" + std::to_string(index);
      c.run_case(name, [&] {
        const LoopElement gamma = gen.loop_element(r, r == 4 ? 1 : 2);
        const TransitionQuad q = build_quad(factorize(gamma));
        c.report(name + ".verify.", verify_quad(q));
        const LoopElement back = extract_quad(q, opts.split);
        c.check(name + ".extract", back == gamma, show(back));
        const Rational alpha = gen.small_nonzero(), beta = gen.small_nonzero();
        const LoopElement scaled = extract_quad(act_torus(q, alpha, beta), opts.split);
        c.check(name + ".torus", scaled == gamma.rescaled(alpha * beta), show(scaled));
        const LoopElement swapped = extract_quad(act_swap(q), opts.split);
        c.check(name + ".swap", swapped == gamma.inverse(), show(swapped));
        const LoopElement weyl = extract_quad(act_weyl(q), opts.split);
        c.check(name + ".weyl", weyl == iota(gamma), show(weyl));
      });
    }
  }
}

// ---------------------------------------------------------------- 3

void nilpotent(Collector& c, const SelftestOptions& opts) {
  Generator gen(mix(opts.seed, 3));
  for (int r = 1; r <= 5; ++r) {
    for (const auto& mu : partitions(r)) {
      std::string name = "jordan";
      for (int k : mu) name += "_" + std::to_string(k);
      c.run_case(name, [&] {
        const QMatrix x = gen.nilpotent_of_type(mu);
        const LoopElement g = exp_embed(x);
        const Coweight lambda = lambda_of_nilpotent(x);
        c.check(name + ".jordan", jordan_type(x) == mu);
        c.check(name + ".pi_e", pi(g) == x);
        c.check(name + ".iota_e", iota(g) == g, show(g));
        c.check(name + ".iota_sq", iota(iota(g)) == g);
        c.check(name + ".pi_iota", pi(iota(g)) == pi(g));
        const Coweight s = stratum(g);
        c.check(name + ".stratum", s == lambda, show(s) + " vs " + show(lambda));
        if (is_small(lambda)) c.check(name + ".e_pi", exp_embed(pi(g)) == g);
        const LoopElement h = gen.loop_element(static_cast<std::size_t>(r), 1) * g;
        c.check(name + ".iota_sq_generic", iota(iota(h)) == h);
        c.check(name + ".pi_iota_generic", pi(iota(h)) == pi(h));
      });
    }
  }
}

// ---------------------------------------------------------------- 4, 5, 8

struct SampledA {
  std::string name;
  AdhmDatumA datum;
};

std::vector<SampledA> sample_type_a(Collector& c, const SelftestOptions& opts) {
  std::vector<SampledA> out;
  int index = 0;
  for (const Coweight& lambda : small_coweights(4, 20, false)) {
    for (std::uint64_t s = 0; s < 2; ++s, ++index) {
      const std::string name = "A" + show(lambda) + "#" + std::to_string(s);
      c.run_case(name + ".sample", [&] {
        out.push_back({name, sample_datum(lambda, mix(opts.seed, 4000 + index), opts.sample)});
      });
    }
  }
  return out;
}

void mv(Collector& c, const SelftestOptions& opts) {
  const std::vector<SampledA> data = sample_type_a(c, opts);
  c.check("sample_count", data.size() >= 30, std::to_string(data.size()));
  for (const auto& [name, d] : data) {
    c.run_case(name, [&] {
      c.report(name + ".", validate(d));
      const LoopElement g = theta_psi_A(d);
      const Coweight expected = lambda_from_v(d.dims, d.r);
      const Coweight s = stratum(g);
      c.check(name + ".stratum", s == expected, show(s) + " vs " + show(expected));
      const LoopElement flipped = theta_psi_A(dagger(d));
      c.check(name + ".dagger", flipped == iota(g), show(flipped));
    });
  }
}

struct SampledD {
  std::string name;
  XiClass xi;
  AdhmDatumD datum;
};

std::vector<SampledD> sample_type_d(Collector& c, const SelftestOptions& opts) {
  std::vector<SampledD> out;
  int index = 0;
  for (const Coweight& lambda : small_coweights(4, 20, true)) {
    if (!is_symmetric(lambda)) continue;
    for (const XiClass& xi : xi_enumerate(lambda)) {
      if (!vD_from_xi(xi)) continue;
      const std::string name = "D" + show(xi);
      c.run_case(name + ".sample", [&] {
        out.push_back({name, xi, sample_datum(xi, mix(opts.seed, 5000 + index++), opts.sample)});
      });
    }
  }
  return out;
}

void glr(Collector& c, const SelftestOptions& opts) {
  const std::vector<SampledD> data = sample_type_d(c, opts);
  c.check("sample_count", !data.empty());
  for (const auto& [name, xi, d] : data) {
    c.run_case(name, [&] {
      c.report(name + ".", validate(d));
      const LoopElement g = theta_psi_D(d);
      const LoopElement ga = theta_psi_A(expand(d));
      c.check(name + ".expand", g == ga, show(g) + " vs " + show(ga));
      c.check(name + ".iota_fixed", iota(g) == g, show(g));
      const FixedClass cls = classify_fixed(g);
      c.check(name + ".classify", cls == xi, show(cls));
    });
  }
}

void monad_checks(Collector& c, const std::string& name, const AdhmQuad& q, Generator& gen) {
  const SymbolicMonad sym = monad_maps_symbolic(q);
  c.check(name + ".complex", (sym.b * sym.a).is_zero());
  const std::size_t n = q.n();
  for (int p = 0; p < 5; ++p) {
    std::array<Rational, 3> z{Rational(p == 4 ? 0 : 1), Rational(gen.integer(-3, 3)), Rational(gen.integer(-3, 3))};
    if (p == 4 && is_zero(z[1]) && is_zero(z[2])) z[1] = 1;
    const MonadMaps m = monad_maps(q, z);
    c.check(name + ".complex@" + std::to_string(p), (m.b * m.a).is_zero());
    c.check(name + ".injective@" + std::to_string(p), rank(m.a) == n);
    c.check(name + ".surjective@" + std::to_string(p), rank(m.b) == n);
  }
}

void monad(Collector& c, const SelftestOptions& opts) {
  Generator gen(mix(opts.seed, 8));
  for (const auto& [name, d] : sample_type_a(c, opts))
    c.run_case(name, [&] { monad_checks(c, name, d.ungraded(), gen); });
  for (const auto& [name, xi, d] : sample_type_d(c, opts))
    c.run_case(name, [&] { monad_checks(c, name, expand(d).ungraded(), gen); });
}

// ---------------------------------------------------------------- 6, 7

void combinatorics(Collector& c, const SelftestOptions&) {
  c.run_case("disconnected", [&] {
    const Coweight lambda({3, 0, 0, -3});
    const std::vector<XiClass> xs = xi_enumerate(lambda);
    const std::vector<XiClass> expected{{lambda, 2, 0}, {lambda, 0, 2}};
    c.check("disconnected.pairs", xs == expected);
    const DimVectorD a{2, 1, {{1, 2}, {2, 1}}};
    const DimVectorD b{3, 0, {{1, 2}, {2, 1}}};
    c.check("disconnected.dims20", vD_from_xi(expected[0]) == a);
    c.check("disconnected.dims02", vD_from_xi(expected[1]) == b);
    const auto tau = tau_multiplicities(a, 4);
    c.check("disconnected.tau", tau && tau->m0_plus == 2 && tau->m0_minus == 0 &&
                                    tau->m == std::map<int, int>{{3, 1}});
    c.check("disconnected.dim", quiver_dim(a, framing_D(4)) == 12 && quiver_dim(b, framing_D(4)) == 12);
  });
  for (int m = 1; m <= 10; ++m) {
    c.run_case("two_row_" + std::to_string(m), [&] {
      const Coweight lambda({m, -m});
      const std::vector<XiClass> xs = xi_enumerate(lambda);
      if (m % 2 == 0) c.check("two_row_" + std::to_string(m) + ".empty", xs.empty());
      else c.check("two_row_" + std::to_string(m) + ".single", xs == std::vector<XiClass>{{lambda, 0, 0}});
    });
  }
  const std::map<int, DimVectorD> explicit_dims{
      {1, {1, 0, {}}}, {3, {2, 1, {{1, 2}, {2, 1}}}}, {5, {3, 2, {{1, 4}, {2, 3}, {3, 2}, {4, 1}}}}};
  for (const auto& [m, expected] : explicit_dims) {
    const std::string name = "typeD_sl2_" + std::to_string(m);
    c.run_case(name, [&] {
      const TypeDSl2 t = typeD_dims_sl2(m);
      c.check(name + ".dims", t.dims == expected);
      c.check(name + ".from_xi", vD_from_xi({Coweight({m, -m}), 0, 0}) == expected);
      c.check(name + ".dim", quiver_dim(t.dims, t.framing) == m + 1 && t.expected_dim == m + 1);
    });
  }
  c.run_case("typeD_sl2_even", [&] {
    bool threw = false;
    try {
      typeD_dims_sl2(2);
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::EvenM;
    }
    c.check("typeD_sl2_even", threw);
  });
}

// <lambda, rho> times 2, computed from positive roots.
long twice_rho_pairing(const Coweight& l) {
  long s = 0;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = i + 1; j < l.rank(); ++j) s += l[i] - l[j];
  return s;
}

void dimensions(Collector& c, const SelftestOptions&) {
  for (std::size_t r = 1; r <= 5; ++r) {
    for (const Coweight& lambda : dominant_coweights(r, 4)) {
      const std::string name = show(lambda);
      c.run_case(name, [&] {
        const long a = quiver_dim(v_from_lambda(lambda), framing_A(static_cast<int>(r)));
        c.check(name + ".A", a == twice_rho_pairing(lambda), std::to_string(a));
        if (!is_symmetric(lambda)) return;
        for (const XiClass& xi : xi_enumerate(lambda)) {
          const auto v = vD_from_xi(xi);
          const int v1 = v_from_lambda(lambda)[1];
          c.check(name + ".feasible", v.has_value() == (xi.m_minus <= v1));
          if (!v) continue;
          const long d = quiver_dim(*v, framing_D(static_cast<int>(r)));
          const long diff = xi.m_plus - xi.m_minus;
          const long four_expected = 2 * twice_rho_pairing(lambda) + static_cast<long>(r * r) - diff * diff;
          c.check(name + ".D" + show(xi), 4 * d == four_expected, std::to_string(d));
        }
      });
    }
  }
}

// ---------------------------------------------------------------- 9

// Sum of the first k exponents equals the t-valuation of the gcd of k-minors.
std::vector<int> snf_oracle(const LaurentMatrix1& m) {
  const std::size_t r = m.rows();
  std::vector<int> prefix{0};
  for (std::size_t k = 1; k <= r; ++k) {
    int best = -1;
    std::vector<std::size_t> rows(k), cols(k);
    const std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, const std::function<void()>&)> subsets =
        [&](std::size_t start, std::size_t depth, std::vector<std::size_t>& pick, const std::function<void()>& done) {
          if (depth == k) return done();
          for (std::size_t s = start; s < r; ++s) {
            pick[depth] = s;
            subsets(s + 1, depth + 1, pick, done);
          }
        };
    subsets(0, 0, rows, [&] {
      subsets(0, 0, cols, [&] {
        const Poly1 d = detail::minor_det(m, rows, cols);
        if (d.is_zero()) return;
        const int v = d.min_exponent(0);
        if (best < 0 || v < best) best = v;
      });
    });
    prefix.push_back(best);
  }
  std::vector<int> out;
  for (std::size_t k = 1; k <= r; ++k) out.push_back(prefix[k] - prefix[k - 1]);
  return out;
}

void properties(Collector& c, const SelftestOptions& opts) {
  Generator gen(mix(opts.seed, 9));
  for (int k = 0; k < 16; ++k) {
    const std::string name = "snf" + std::to_string(k);
    c.run_case(name, [&] {
      const std::size_t r = 2 + k % 3;
      const LaurentMatrix1 m = gen.monomial_det_matrix(r);
      const SnfResult s = smith_normal_form(m);
      c.check(name + ".reconstruct", s.left * tpow_diag(s.exponents) * s.right == m);
      c.check(name + ".ascending", std::is_sorted(s.exponents.begin(), s.exponents.end()));
      c.check(name + ".polynomial", is_polynomial(s.left) && is_polynomial(s.right));
      c.check(name + ".det_left", determinant(s.left) == Poly1(1));
      const Poly1 dr = determinant(s.right);
      c.check(name + ".det_right", dr.is_constant() && !dr.is_zero());
      c.check(name + ".oracle", s.exponents == snf_oracle(m));
    });
  }
  for (int k = 0; k < 16; ++k) {
    const std::string name = "split" + std::to_string(k);
    c.run_case(name, [&] {
      const std::size_t r = 2 + k % 3;
      const LaurentMatrix2 left = gen.elementary_product(r, -2, -1, -2, -1, 3);
      const LaurentMatrix2 right = gen.elementary_product(r, 0, 2, -2, -1, 3);
      const BirkhoffSplit s = birkhoff_split_u(left * right, opts.split);
      c.check(name + ".reconstruct", s.left * s.right == left * right);
      c.check(name + ".unique", s.left == left && s.right == right);
    });
  }
  std::vector<LoopElement> cases{LoopElement(poly1_matrix({{"1", "t^-1"}, {"0", "1"}}))};
  for (std::size_t r : {2u, 2u, 3u, 3u, 4u}) cases.push_back(gen.loop_element(r, 1));
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const std::string name = "gauge" + std::to_string(k);
    c.run_case(name, [&] {
      const LoopElement& gamma = cases[k];
      const std::size_t r = gamma.rank();
      const TransitionQuad q = build_quad(factorize(gamma));
      for (int h = 0; h < 20; ++h) {
        const GaugeElement g = gen.gauge(r);
        c.report(name + ".h" + std::to_string(h) + ".", verify_gauge(g));
        const TransitionQuad moved = act_gauge(q, g);
        c.report(name + ".h" + std::to_string(h) + ".", verify_quad(moved));
        const LoopElement back = extract_quad(moved, opts.split);
        c.check(name + ".h" + std::to_string(h) + ".extract", back == gamma, show(back));
      }
      const QMatrix g = gen.unimodular(r);
      const LaurentMatrix2 lg = to_laurent<2>(g);
      const GaugeElement conj{lg, LaurentMatrix2::identity(r), LaurentMatrix2::identity(r),
                              LaurentMatrix2::identity(r)};
      c.check(name + ".G_action", act_gauge(act_G(q, g), conj) == TransitionQuad{
                                                                    lg * q.g01_00 * adjugate_inverse(lg),
                                                                    lg * q.g10_00 * adjugate_inverse(lg),
                                                                    lg * q.g11_01 * adjugate_inverse(lg),
                                                                    lg * q.g11_10 * adjugate_inverse(lg)});
      c.check(name + ".G_extract", extract_quad(act_G(q, g), opts.split) == gamma.conjugated(g));
    });
  }
}

struct SuiteDef {
  const char* name;
  int criterion;
  void (*run)(Collector&, const SelftestOptions&);
};

const SuiteDef kSuites[] = {
    {"worked-examples", 1, worked_examples}, {"normalizer", 2, normalizer},   {"nilpotent", 3, nilpotent},
    {"mv", 4, mv},                         {"glr", 5, glr},                 {"combinatorics", 6, combinatorics},
    {"dimensions", 7, dimensions},         {"monad", 8, monad},             {"properties", 9, properties},
};

}  // namespace

std::string SuiteResult::summary_line() const {
  std::ostringstream s;
  s << "[" << (passed() ? "PASS" : "FAIL") << "] criterion " << criterion << " " << name << ": " << cases
    << " cases, " << checks_run << " checks, " << failures.size() << " failed";
  return s.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& s : kSuites)
    if (name == s.name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const SelftestOptions& opts) {
  for (const auto& s : kSuites) {
    if (name != s.name) continue;
    SuiteResult out;
    out.name = s.name;
    out.criterion = s.criterion;
    Collector c(out);
    s.run(c, opts);
    return out;
  }
  throw Error(ErrorCode::ParseError, "unknown suite " + name);
}

}  // namespace grassline::tools
