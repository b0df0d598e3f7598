#include "etale/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace etale {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

std::string AlgebraData::name() const { return std::string(1, series_letter(series)) + std::to_string(rank); }

int AlgebraData::a_current(int j) const {
  if (series != Series::A) throw std::invalid_argument("J_a is defined for the A-series only");
  return static_cast<int>(mod_pos(j, rank + 1));
}

namespace {

std::vector<std::vector<int>> cartan_matrix(Series s, int r) {
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (s) {
    case Series::A:
    case Series::B:
    case Series::C:
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
      if (s == Series::B) a[r - 1][r - 2] = -2;
      if (s == Series::C) a[r - 2][r - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < r - 1; ++i) bond(i, i + 1);
      bond(r - 3, r - 2);
      bond(r - 3, r - 1);
      break;
    case Series::E:
      for (int i = 0; i + 1 < r - 1; ++i) bond(i, i + 1);
      // branch node: 3 for E6/E7 and 5 for E8 (1-based)
      bond(r == 8 ? 4 : 2, r - 1);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[2][1] = -2;
      break;
    case Series::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

void validate_rank(Series s, int r) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = r >= 1; break;
    case Series::B: ok = r >= 3; break;
    case Series::C: ok = r >= 2; break;
    case Series::D: ok = r >= 4; break;
    case Series::E: ok = r >= 6 && r <= 8; break;
    case Series::F: ok = r == 4; break;
    case Series::G: ok = r == 2; break;
  }
  if (!ok || r > 14) {
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(r) + " for series " +
                                series_letter(s));
  }
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == Rational(0)) ++p;
    if (p == n) throw std::runtime_error("singular Cartan matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == Rational(0)) continue;
      Rational f = m[i][c];
      for (int j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// node movements of extended diagram automorphisms; converted to source form by inverse()
std::vector<Perm> current_generators(Series s, int r) {
  std::vector<Perm> gens;
  auto movement = [&](std::vector<std::pair<int, int>> swaps) {
    Perm p(r + 1);
    std::iota(p.begin(), p.end(), 0);
    for (auto [a, b] : swaps) std::swap(p[a], p[b]);
    return p;
  };
  auto reversal = [&] {
    Perm p(r + 1);
    for (int i = 0; i <= r; ++i) p[i] = r - i;
    return p;
  };
  switch (s) {
    case Series::A: {
      Perm src(r + 1);
      for (int i = 0; i <= r; ++i) src[i] = (i + r) % (r + 1);
      return {src};
    }
    case Series::B: gens.push_back(movement({{0, 1}})); break;
    case Series::C: gens.push_back(reversal()); break;
    case Series::D:
      if (r % 2 == 0) {
        gens.push_back(movement({{0, 1}, {r - 1, r}}));
        gens.push_back(reversal());
      } else {
        Perm rev = reversal();
        Perm p(r + 1);
        for (int i = 0; i <= r; ++i) {
          int j = rev[i];
          p[i] = (j == r - 1) ? r : (j == r ? r - 1 : j);
        }
        gens.push_back(p);
      }
      break;
    case Series::E:
      if (r == 6) {
        // legs (2,1), (4,5), (6,0) around node 3 rotated cyclically
        Perm p = {1, 5, 4, 3, 6, 0, 2};
        gens.push_back(p);
      } else if (r == 7) {
        Perm p(8);
        for (int i = 0; i <= 6; ++i) p[i] = 6 - i;
        p[7] = 7;
        gens.push_back(p);
      }
      break;
    default: break;
  }
  for (auto& g : gens) g = inverse(g);
  return gens;
}

}  // namespace

Perm compose(const Perm& outer, const Perm& inner) {
  // (outer inner lambda)_i = (inner lambda)_{outer[i]} = lambda_{inner[outer[i]]}
  Perm p(outer.size());
  for (size_t i = 0; i < outer.size(); ++i) p[i] = inner[outer[i]];
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

int perm_order(const Perm& p) {
  Perm id(p.size());
  std::iota(id.begin(), id.end(), 0);
  Perm q = p;
  int n = 1;
  while (q != id) {
    q = compose(q, p);
    ++n;
  }
  return n;
}

AlgebraPtr build_algebra(Series s, int r) {
  validate_rank(s, r);
  auto alg = std::make_shared<AlgebraData>();
  alg->series = s;
  alg->rank = r;
  alg->cartan = cartan_matrix(s, r);
  const auto& A = alg->cartan;

  // root norms from symmetrizability, long roots normalized to 2
  std::vector<Rational> norm(r, Rational(0));
  norm[0] = 1;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < r; ++j) {
      if (j == i || A[i][j] == 0 || norm[j] != Rational(0)) continue;
      norm[j] = norm[i] * Rational(A[i][j], A[j][i]);
      stack.push_back(j);
    }
  }
  Rational mx = *std::max_element(norm.begin(), norm.end());
  for (auto& n : norm) n = n * 2 / mx;
  alg->root_norm = norm;

  // positive roots by the root-string algorithm
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    roots.insert(e);
  }
  std::vector<std::vector<int>> ordered = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& b : layer) {
      for (int i = 0; i < r; ++i) {
        int pair = 0;
        for (int j = 0; j < r; ++j) pair += b[j] * A[i][j];
        int p = 0;
        std::vector<int> down = b;
        while (true) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pair > 0) {
          std::vector<int> up = b;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& b : layer) {
      roots.insert(b);
      ordered.push_back(b);
    }
  }
  alg->dim = r + 2 * static_cast<int>(ordered.size());

  const auto& theta = ordered.back();
  alg->marks = theta;
  alg->comarks.resize(r);
  int hv = 1;
  for (int i = 0; i < r; ++i) {
    Rational c = Rational(theta[i]) * norm[i] / 2;
    if (c.denominator() != 1) throw std::logic_error("non-integral comark");
    alg->comarks[i] = static_cast<int>(c.numerator());
    hv += alg->comarks[i];
  }
  alg->dual_coxeter = hv;

  long long pden = 1;
  for (int i = 0; i < r; ++i) pden = lcm_ll(pden, (norm[i] / 2).denominator());
  alg->pairing_den = pden;
  for (const auto& c : ordered) {
    Root rt;
    rt.simple_coords = c;
    rt.pairing.resize(r);
    for (int i = 0; i < r; ++i) {
      Rational v = Rational(c[i]) * norm[i] / 2 * pden;
      rt.pairing[i] = v.numerator();
    }
    alg->pos_roots.push_back(rt);
  }

  std::vector<std::vector<Rational>> am(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) am[i][j] = A[i][j];
  auto inv = invert(am);
  alg->quad_form.assign(r, std::vector<Rational>(r));
  long long den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      alg->quad_form[i][j] = inv[j][i] * norm[j] / 2;
      den = lcm_ll(den, alg->quad_form[i][j].denominator());
    }
  alg->quad_den = den;
  alg->quad_int.assign(r, std::vector<long long>(r));
  alg->rho_quad.assign(r, 0);
  Rational rr(0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      alg->quad_int[i][j] = (alg->quad_form[i][j] * den).numerator();
      alg->rho_quad[i] += alg->quad_int[i][j];
      rr += alg->quad_form[i][j];
    }
  alg->weyl_vector_norm = rr;
  alg->center_exponent = static_cast<int>(den);

  long long f = 1;
  for (int i = 0; i < r; ++i) {
    Rational s(0);
    for (int j = 0; j < r; ++j) s += alg->quad_form[i][j];
    f = lcm_ll(f, s.denominator());
  }
  // squarefree part
  long long rad = 1;
  for (long long q = 2; q <= f; ++q)
    if (f % q == 0) {
      rad *= q;
      while (f % q == 0) f /= q;
    }
  alg->f_g = static_cast<int>(rad);

  alg->duality_perm.resize(r);
  std::iota(alg->duality_perm.begin(), alg->duality_perm.end(), 0);
  if (s == Series::A) {
    for (int i = 0; i < r; ++i) alg->duality_perm[i] = r - 1 - i;
  } else if (s == Series::D && r % 2 == 1) {
    std::swap(alg->duality_perm[r - 2], alg->duality_perm[r - 1]);
  } else if (s == Series::E && r == 6) {
    alg->duality_perm = {4, 3, 2, 1, 0, 5};
  }

  // simple-current group by closure; A-series ordered by powers of J_a
  auto gens = current_generators(s, r);
  Perm id(r + 1);
  std::iota(id.begin(), id.end(), 0);
  alg->simple_currents = {id};
  if (s == Series::A) {
    Perm p = gens[0];
    while (p != id) {
      alg->simple_currents.push_back(p);
      p = compose(p, gens[0]);
    }
    alg->sc_generators = {1};
  } else {
    for (size_t q = 0; q < alg->simple_currents.size(); ++q) {
      for (const auto& g : gens) {
        Perm n = compose(alg->simple_currents[q], g);
        if (std::find(alg->simple_currents.begin(), alg->simple_currents.end(), n) == alg->simple_currents.end())
          alg->simple_currents.push_back(n);
      }
    }
    for (const auto& g : gens) {
      auto it = std::find(alg->simple_currents.begin(), alg->simple_currents.end(), g);
      alg->sc_generators.push_back(static_cast<int>(it - alg->simple_currents.begin()));
    }
  }
  for (const auto& J : alg->simple_currents) {
    int t = 0;
    for (int i = 0; i <= r; ++i)
      if (J[i] == 0) t = i;
    alg->sc_target.push_back(t);
  }
  return alg;
}

AlgebraPtr parse_algebra(const std::string& spec) {
  std::string t;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2) throw std::invalid_argument("bad algebra spec '" + spec + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  if (c < 'A' || c > 'G') throw std::invalid_argument("bad algebra series in '" + spec + "'");
  std::string digits = t.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
    throw std::invalid_argument("bad algebra rank in '" + spec + "'");
  return build_algebra(static_cast<Series>(c - 'A'), std::stoi(digits));
}

long long inner_product_scaled(const Weight& lam, const Weight& mu, const AlgebraData& alg) {
  long long s = 0;
  for (int i = 0; i < alg.rank; ++i) {
    if (lam[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < alg.rank; ++j) row += alg.quad_int[i][j] * mu[j];
    s += lam[i] * row;
  }
  return s;
}

Rational inner_product(const Weight& lam, const Weight& mu, const AlgebraData& alg) {
  if (static_cast<int>(lam.size()) != alg.rank || static_cast<int>(mu.size()) != alg.rank)
    throw std::invalid_argument("weight length differs from rank");
  return Rational(inner_product_scaled(lam, mu, alg), alg.quad_den);
}

int t_index(const Weight& lam) {
  int t = 0;
  for (size_t i = 0; i < lam.size(); ++i) t += static_cast<int>(i + 1) * lam[i];
  return t;
}

Weight partial_sums(const Weight& lam) {
  Weight p(lam.size());
  int s = 0;
  for (size_t i = lam.size(); i-- > 0;) {
    s += lam[i];
    p[i] = s;
  }
  return p;
}

Rational a_series_inner(const Weight& lam, const Weight& mu) {
  const long long rp = static_cast<long long>(lam.size()) + 1;
  Weight a = partial_sums(lam), b = partial_sums(mu);
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return Rational(s) - Rational(static_cast<long long>(t_index(lam)) * t_index(mu), rp);
}

Weight contragredient(const Weight& lam, const AlgebraData& alg) {
  Weight out(alg.rank);
  for (int i = 0; i < alg.rank; ++i) out[alg.duality_perm[i]] = lam[i];
  return out;
}

int zeroth_label(const Weight& lam, int level, const AlgebraData& alg) {
  int s = level;
  for (int i = 0; i < alg.rank; ++i) s -= alg.comarks[i] * lam[i];
  return s;
}

Weight apply_simple_current(const Perm& J, const Weight& lam, int level, const AlgebraData& alg) {
  std::vector<int> ext(alg.rank + 1);
  ext[0] = zeroth_label(lam, level, alg);
  for (int i = 0; i < alg.rank; ++i) ext[i + 1] = lam[i];
  Weight out(alg.rank);
  for (int i = 1; i <= alg.rank; ++i) out[i - 1] = ext[J[i]];
  return out;
}

Weight rho_weight(const AlgebraData& alg) { return Weight(alg.rank, 1); }

Weight shift(const Weight& lam) {
  Weight s = lam;
  for (auto& x : s) ++x;
  return s;
}

Weight unshift(const Weight& lam) {
  Weight s = lam;
  for (auto& x : s) --x;
  return s;
}

}  // namespace etale
