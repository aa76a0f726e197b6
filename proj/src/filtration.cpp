#include "thetarep/filtration.hpp"

#include <algorithm>
#include <random>

namespace thetarep {

namespace {

long long bound_for(const FieldSpec& F, int m) { return m + m * F.q() + F.q(); }

void check_bound(const FieldSpec& F, const std::vector<int>& r, int m) {
  for (int x : r)
    if (x < bound_for(F, m))
      throw Error(ErrorKind::BoundViolated,
                  "need r_i >= m + mq + q = " + std::to_string(bound_for(F, m)));
}

std::vector<long long> r_prime_of(const FieldSpec& F, const std::vector<int>& r,
                                  const std::vector<int>& j) {
  const int f = F.f();
  std::vector<long long> rp(f);
  for (int i = 0; i < f; ++i) rp[i] = r[i] - j[i] - static_cast<long long>(F.p()) * j[(i + 1) % f];
  return rp;
}

long long digits_to_int(const FieldSpec& F, const std::vector<long long>& d) {
  long long v = 0;
  for (size_t i = 0; i < d.size(); ++i) v += d[i] * pow_ll(F.p(), static_cast<int>(i));
  return v;
}

std::vector<std::vector<int>> unit_tuples(int f) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < f; ++i) {
    std::vector<int> e(f, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

// denominator generators of the principal-series cell: P * theta_i for each i
std::vector<std::vector<int>> cell_denominator_tuples(const std::vector<int>& j) {
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::vector<int> t = j;
    t[i] += 1;
    out.push_back(std::move(t));
  }
  return out;
}

Subspace kernel_of_cell_map(const RepSpace& big, const RepSpace& small, const MultiPoly& P,
                            const Subspace& denom) {
  // columns: P * (monomial of small), reduced modulo the denominator
  Mat K(big.dim(), small.dim());
  for (long long t = 0; t < small.dim(); ++t) {
    Vec col = denom.reduce(multiply_monomial(small, big, P, small.exps_of(t)));
    for (long long i = 0; i < big.dim(); ++i) K.at(i, t) = col[i];
  }
  return Subspace::span(small, kernel_basis(big.field().fq(), K));
}

}  // namespace

std::vector<std::vector<int>> layer_cells(int ell, int f) {
  if (ell == 0) return {std::vector<int>(f, 0)};
  std::vector<std::vector<int>> all;
  std::vector<int> j(f, 0);
  while (true) {
    if (*std::max_element(j.begin(), j.end()) == ell) all.push_back(j);
    int i = 0;
    while (i < f && j[i] == ell) j[i++] = 0;
    if (i == f) break;
    ++j[i];
  }
  auto key = [&](const std::vector<int>& t) {
    int total = 0, firstmax = 0;
    for (int i = 0; i < f; ++i) total += t[i];
    for (int i = 0; i < f; ++i)
      if (t[i] == ell) {
        firstmax = i;
        break;
      }
    std::vector<int> neg(t.size());
    for (size_t i = 0; i < t.size(); ++i) neg[i] = -t[i];
    return std::tuple(-total, firstmax, neg);
  };
  std::sort(all.begin(), all.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return all;
}

FiltrationResult theta_filtration(const FieldSpec& F, const std::vector<int>& r, int m,
                                  const FiltrationOptions& opt) {
  if (!opt.force) check_bound(F, r, m);
  const int f = F.f();
  RepSpace V(F, r);

  // V^{(ell)} for ell = 0..m+1
  std::vector<Subspace> layer_span;
  layer_span.push_back(Subspace::full(V));
  for (int ell = 1; ell <= m + 1; ++ell) {
    std::vector<std::vector<int>> gens;
    for (const auto& e : unit_tuples(f)) {
      std::vector<int> t(e);
      for (auto& x : t) x *= ell;
      gens.push_back(std::move(t));
    }
    layer_span.push_back(theta_span(V, gens));
  }

  FiltrationResult res;
  res.r = r;
  res.m = m;
  res.total_dim = V.dim() - layer_span[m + 1].dim();
  res.expected_total = pow_ll(m + 1, f) * (F.q() + 1);

  std::optional<CharTable> chars;
  if (opt.check_characters) chars.emplace(F);

  for (int ell = 0; ell <= m; ++ell) {
    Subspace accumulated = layer_span[ell + 1];
    for (const auto& j : layer_cells(ell, f)) {
      CellReport cell;
      cell.j = j;
      cell.layer = ell;
      cell.level = 0;
      for (int x : j) cell.level += x;
      cell.level -= ell;
      cell.S = digits_to_int(F, std::vector<long long>(j.begin(), j.end()));
      cell.r_prime = r_prime_of(F, r, j);
      cell.r_prime_int = digits_to_int(F, cell.r_prime);

      MultiPoly P = theta_product(F, j);
      Subspace cell_mod = multiples_subspace(V, P);
      Subspace next = accumulated.sum(cell_mod);
      cell.subquot_dim = next.dim() - accumulated.dim();

      Subspace denom = theta_span(V, cell_denominator_tuples(j));
      cell.iso_quot_dim = cell_mod.dim() - denom.dim();
      cell.dims_agree = (cell.iso_quot_dim == cell.subquot_dim);

      if (opt.check_kernels || opt.check_characters) {
        std::vector<int> rp_int(cell.r_prime.begin(), cell.r_prime.end());
        RepSpace Vp(F, rp_int);
        if (opt.check_kernels) {
          cell.checked_kernel = true;
          Subspace ker = kernel_of_cell_map(V, Vp, P, denom);
          cell.kernel_ok = (ker == theta_span(Vp, unit_tuples(f)));
        }
        if (opt.check_characters) {
          cell.checked_char = true;
          auto lhs = chars->module_char_row(cell_mod, denom);
          auto rhs = chars->induced_char_row(cell.S, cell.r_prime_int);
          cell.char_ok = chars->rows_equal(lhs, rhs);
        }
      }
      accumulated = std::move(next);
      res.cells.push_back(std::move(cell));
    }
    if (!(accumulated == layer_span[ell]))
      throw Error(ErrorKind::DimensionMismatch, "filtration does not exhaust the layer");
  }
  return res;
}

Iso1Report verify_iso1(const FieldSpec& F, const std::vector<int>& r, const std::vector<int>& j) {
  Iso1Report rep;
  rep.j = j;
  rep.S = digits_to_int(F, std::vector<long long>(j.begin(), j.end()));
  rep.r_prime = r_prime_of(F, r, j);
  rep.r_prime_int = digits_to_int(F, rep.r_prime);
  rep.expected_dim = F.q() + 1;
  for (long long rp : rep.r_prime)
    if (rp < F.q())
      throw Error(ErrorKind::BoundViolated, "need r'_i >= q  (got " + std::to_string(rp) + ")");

  RepSpace V(F, r);
  std::vector<int> rp_int(rep.r_prime.begin(), rep.r_prime.end());
  RepSpace Vp(F, rp_int);

  MultiPoly P = theta_product(F, j);
  Subspace num = multiples_subspace(V, P);
  Subspace denom = theta_span(V, cell_denominator_tuples(j));
  if (!num.contains(denom))
    throw Error(ErrorKind::DimensionMismatch, "denominator escapes the cell");
  rep.quot_dim = num.dim() - denom.dim();

  Subspace ker = kernel_of_cell_map(V, Vp, P, denom);
  rep.kernel_ok = (ker == theta_span(Vp, unit_tuples(F.f())));

  CharTable chars(F);
  rep.char_ok = chars.rows_equal(chars.module_char_row(num, denom),
                                 chars.induced_char_row(rep.S, rep.r_prime_int));
  return rep;
}

bool verify_intersection(const FieldSpec& F, const std::vector<int>& r, int m) {
  RepSpace V(F, r);
  const int f = F.f();
  std::vector<int> all_m(f, m);
  Subspace product_side = multiples_subspace(V, theta_product(F, all_m));
  std::vector<std::vector<int>> pow_tuples;
  for (const auto& e : unit_tuples(f)) {
    std::vector<int> t(e);
    for (auto& x : t) x *= m + 1;
    pow_tuples.push_back(std::move(t));
  }
  Subspace lhs = product_side.intersect(theta_span(V, pow_tuples));
  Subspace rhs = theta_span(V, cell_denominator_tuples(all_m));
  return lhs == rhs;
}

namespace {

// dense matrix of the diagonal action on a tensor product of two spaces
Mat tensor_action(const RepSpace& V1, const RepSpace& V2, const GroupElement& g) {
  const SmallField& K = V1.field().fq();
  BlockAction A1(V1, g), A2(V2, g);
  Mat M1(V1.dim(), V1.dim()), M2(V2.dim(), V2.dim());
  for (long long t = 0; t < V1.dim(); ++t) {
    Vec e(V1.dim(), 0);
    e[t] = static_cast<Entry>(K.from_int(1));
    Vec img = A1.apply(e);
    for (long long i = 0; i < V1.dim(); ++i) M1.at(i, t) = img[i];
  }
  for (long long t = 0; t < V2.dim(); ++t) {
    Vec e(V2.dim(), 0);
    e[t] = static_cast<Entry>(K.from_int(1));
    Vec img = A2.apply(e);
    for (long long i = 0; i < V2.dim(); ++i) M2.at(i, t) = img[i];
  }
  Mat M(V1.dim() * V2.dim(), V1.dim() * V2.dim());
  for (long long i1 = 0; i1 < V1.dim(); ++i1)
    for (long long j1 = 0; j1 < V1.dim(); ++j1) {
      Elt a = M1.at(i1, j1);
      if (!a) continue;
      for (long long i2 = 0; i2 < V2.dim(); ++i2)
        for (long long j2 = 0; j2 < V2.dim(); ++j2) {
          Elt b = M2.at(i2, j2);
          if (!b) continue;
          M.at(i1 * V2.dim() + i2, j1 * V2.dim() + j2) = static_cast<Entry>(K.mul(a, b));
        }
    }
  return M;
}

GroupElement seeded_element(const FieldSpec& F, std::mt19937_64& rng) {
  while (true) {
    GroupElement g{static_cast<Elt>(rng() % F.q()), static_cast<Elt>(rng() % F.q()),
                   static_cast<Elt>(rng() % F.q()), static_cast<Elt>(rng() % F.q())};
    if (det_of(F, g) != 0) return g;
  }
}

}  // namespace

SesReport verify_ses(const FieldSpec& F, const std::vector<int>& m, int block, int n_i,
                     unsigned long long seed) {
  const int f = F.f();
  const SmallField& K = F.fq();
  if (block < 0 || block >= f || m[block] < 1 || n_i < 1)
    throw Error(ErrorKind::PreconditionViolated, "need m_i, n_i >= 1");

  std::vector<int> m_sub = m;
  m_sub[block] -= 1;
  std::vector<int> small(f, 0), big(f, 0);
  small[block] = n_i - 1;
  big[block] = n_i;
  std::vector<int> top = m;
  top[block] += n_i;

  RepSpace A1(F, m_sub), A2(F, small);  // sub = A1 (x) A2 (x) det^{p^block}
  RepSpace T1(F, m), T2(F, big);        // middle
  RepSpace C(F, top);                   // quotient

  const long long dimA = A1.dim() * A2.dim();
  const long long dimT = T1.dim() * T2.dim();
  const long long dimC = C.dim();
  if (dimT > 20000 || dimT * dimC > 40000)
    throw Error(ErrorKind::DimensionOverflow, "tensor instance beyond the desk-scale cap");

  // injection: P (x) Q -> (x_i P) (x) (y_i Q) - (y_i P) (x) (x_i Q)
  Mat L(dimT, dimA);
  for (long long u = 0; u < A1.dim(); ++u)
    for (long long v = 0; v < A2.dim(); ++v) {
      std::vector<int> eu = A1.exps_of(u), ev = A2.exps_of(v);
      std::vector<int> exu = eu, exv = ev;
      exu[block] += 1;  // x_i P
      long long t1 = T1.index_of(exu) * T2.dim() + T2.index_of(ev);
      exv[block] += 1;  // x_i Q
      long long t2 = T1.index_of(eu) * T2.dim() + T2.index_of(exv);
      long long col = u * A2.dim() + v;
      L.at(t1, col) = static_cast<Entry>(K.add(L.at(t1, col), K.from_int(1)));
      L.at(t2, col) = static_cast<Entry>(K.add(L.at(t2, col), K.from_int(-1)));
    }

  // mu: P (x) Q -> PQ
  Mat MU(dimC, dimT);
  for (long long u = 0; u < T1.dim(); ++u)
    for (long long v = 0; v < T2.dim(); ++v) {
      std::vector<int> e = T1.exps_of(u), ev = T2.exps_of(v);
      for (int i = 0; i < f; ++i) e[i] += ev[i];
      MU.at(C.index_of(e), u * T2.dim() + v) = static_cast<Entry>(K.from_int(1));
    }

  SesReport rep;
  rep.lucas_predicts_split = lucas_coprime(F.p(), m[block] + n_i, m[block]);

  Mat Lc = L;
  rep.injective = (rank_of(K, Lc) == dimA);
  rep.surjective = (rank_of(K, MU) == dimC);

  Mat image = L;
  {
    // transpose columns to rows for span comparison
    Mat rows(dimA, dimT);
    for (long long i = 0; i < dimT; ++i)
      for (long long j = 0; j < dimA; ++j) rows.at(j, i) = image.at(i, j);
    Mat ker = kernel_basis(K, MU);
    rref(K, rows);
    rep.exact = (rows == ker);
  }

  // equivariance spot checks: mu intertwines, the injection with det^{p^i}
  std::mt19937_64 rng(seed);
  rep.equivariance_ok = true;
  for (int t = 0; t < 8; ++t) {
    GroupElement g = seeded_element(F, rng);
    Mat rhoT = tensor_action(T1, T2, g);
    Mat rhoA = tensor_action(A1, A2, g);
    // twist by det^{p^block}
    Elt tw = K.pow(det_of(F, g), pow_ll(F.p(), block));
    for (auto& x : rhoA.a) x = static_cast<Entry>(K.mul(tw, x));
    Mat lhs = matmul(K, L, rhoA);
    Mat rhs = matmul(K, rhoT, L);
    if (!(lhs == rhs)) rep.equivariance_ok = false;

    BlockAction AC(C, g);
    Mat rhoC(dimC, dimC);
    for (long long c = 0; c < dimC; ++c) {
      Vec e(dimC, 0);
      e[c] = static_cast<Entry>(K.from_int(1));
      Vec img = AC.apply(e);
      for (long long i = 0; i < dimC; ++i) rhoC.at(i, c) = img[i];
    }
    if (!(matmul(K, MU, rhoT) == matmul(K, rhoC, MU))) rep.equivariance_ok = false;
  }

  // equivariant section: unknown s of shape dimT x dimC with mu s = id and
  // rhoT s = s rhoC for the three generators
  {
    const long long nu = dimT * dimC;
    std::vector<Mat> rhoTs, rhoCs;
    for (const auto& g : group_generators(F)) {
      rhoTs.push_back(tensor_action(T1, T2, g));
      BlockAction AC(C, g);
      Mat rhoC(dimC, dimC);
      for (long long c = 0; c < dimC; ++c) {
        Vec e(dimC, 0);
        e[c] = static_cast<Entry>(K.from_int(1));
        Vec img = AC.apply(e);
        for (long long i = 0; i < dimC; ++i) rhoC.at(i, c) = img[i];
      }
      rhoCs.push_back(std::move(rhoC));
    }

    const long long rows = dimC * dimC + 3 * dimT * dimC;
    Mat sys(rows, nu);
    Vec rhs(rows, 0);
    long long eq = 0;
    // mu s = id
    for (long long cp = 0; cp < dimC; ++cp)
      for (long long c = 0; c < dimC; ++c, ++eq) {
        for (long long t = 0; t < dimT; ++t)
          sys.at(eq, t * dimC + c) = MU.at(cp, t);
        rhs[eq] = static_cast<Entry>(cp == c ? K.from_int(1) : 0);
      }
    // rhoT s - s rhoC = 0
    for (size_t gidx = 0; gidx < rhoTs.size(); ++gidx)
      for (long long t = 0; t < dimT; ++t)
        for (long long c = 0; c < dimC; ++c, ++eq) {
          for (long long t2 = 0; t2 < dimT; ++t2)
            sys.at(eq, t2 * dimC + c) =
                static_cast<Entry>(K.add(sys.at(eq, t2 * dimC + c), rhoTs[gidx].at(t, t2)));
          for (long long c2 = 0; c2 < dimC; ++c2)
            sys.at(eq, t * dimC + c2) = static_cast<Entry>(
                K.sub(sys.at(eq, t * dimC + c2), rhoCs[gidx].at(c2, c)));
        }
    rep.split = solve_affine(K, std::move(sys), std::move(rhs)).has_value();
  }
  return rep;
}

ProjectiveReport verify_projective(const FieldSpec& F, const std::vector<int>& m, int k,
                                   unsigned long long seed) {
  const int f = F.f();
  const SmallField& K = F.fq();
  const long long pk = pow_ll(F.p(), k);

  RepSpace V1(F, m);
  std::vector<int> st(f, static_cast<int>(pk - 1));
  RepSpace V2(F, st);
  ProjectiveReport rep;
  rep.target.resize(f);
  for (int i = 0; i < f; ++i)
    rep.target[i] = static_cast<int>((m[(i + k) % f] + 1) * pk - 1);
  RepSpace W(F, rep.target);
  rep.target_dim = W.dim();

  const long long dimT = V1.dim() * V2.dim();
  if (dimT > 20000) throw Error(ErrorKind::DimensionOverflow, "tensor instance beyond cap");

  // chi(u (x) v): block t of the image has x-exponent u_{t+k} p^k + v_t
  Mat CHI(W.dim(), dimT);
  for (long long u = 0; u < V1.dim(); ++u) {
    std::vector<int> eu = V1.exps_of(u);
    for (long long v = 0; v < V2.dim(); ++v) {
      std::vector<int> ev = V2.exps_of(v), ew(f);
      for (int t = 0; t < f; ++t) ew[t] = static_cast<int>(eu[(t + k) % f] * pk + ev[t]);
      CHI.at(W.index_of(ew), u * V2.dim() + v) = static_cast<Entry>(K.from_int(1));
    }
  }
  {
    Mat c = CHI;
    rep.rank = rank_of(K, std::move(c));
  }

  std::mt19937_64 rng(seed);
  rep.equivariance_ok = true;
  for (int t = 0; t < 20; ++t) {
    GroupElement g = seeded_element(F, rng);
    Vec w(dimT);
    for (auto& x : w) x = static_cast<Entry>(rng() % F.q());
    Mat rhoT = tensor_action(V1, V2, g);
    Vec lhs = matvec(K, CHI, matvec(K, rhoT, w));
    Vec rhs = act(F, g, matvec(K, CHI, w), W);
    if (!(lhs == rhs)) rep.equivariance_ok = false;
  }
  return rep;
}

}  // namespace thetarep
