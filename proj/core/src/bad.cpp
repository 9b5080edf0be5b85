// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/bad.hpp"

#include <algorithm>
#include <cmath>

#include "msgame/errors.hpp"

namespace msgame {

namespace {

using u128 = unsigned __int128;
using i64 = long;

Int factorial_int(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// x must be >= 0 and < 2^128.
u128 u128_from_mpz(const Int& x) {
  Int hi = x >> 64;
  Int lo = x - (hi << 64);
  return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

bool fits_u128(const Int& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 127;
}

bool fits_i64_magnitude(const Int& x, long bits = 62) {
  return mpz_sizeinbase(x.get_mpz_t(), 2) <= static_cast<std::size_t>(bits);
}

// Per-coordinate window data: candidate numerators p for denominator q are
// the integers strictly inside ((q*An - Cn)/D, (q*Bn + Cn)/D).  The window is
// a superset of the true reach c'/q^(1+r) because c'/q^(1+r) <= c'/q for
// q >= 1; exact filtering happens per candidate.
struct CoordData {
  std::size_t index;
  Rat lo, hi;
  Rat d, s;
  unsigned long pow_exp;  // lambda * (1 + r_i), an integer
  Int D, An, Bn, Cn;
};

class DangerScanner {
 public:
  DangerScanner(const AxisBox& box, const std::vector<Rat>& weights,
                const AffineDiagonalMap& f, const Rat& c_prime)
      : c_prime_(c_prime) {
    const std::size_t n = box.dim();
    if (weights.size() != n || f.dim() != n) {
      throw Error(ErrorKind::kConfigError, "scanner: dimension mismatch");
    }
    if (c_prime <= 0) {
      throw Error(ErrorKind::kConfigError, "scanner: c' must be positive");
    }
    std::vector<Rat> retained;
    for (std::size_t i = 0; i < n; ++i) {
      if (weights[i] < 0) {
        throw Error(ErrorKind::kConfigError, "scanner: negative weight");
      }
      if (weights[i] > 0) retained.push_back(weights[i]);
    }
    if (retained.empty()) {
      throw Error(ErrorKind::kConfigError, "scanner: no positive weights");
    }
    lambda_ = lcm_denominators(retained);
    if (!lambda_.fits_ulong_p()) {
      throw Error(ErrorKind::kConfigError, "scanner: weight lattice too large");
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (weights[i] == 0) continue;
      CoordData c;
      c.index = i;
      c.lo = box.lo[i];
      c.hi = box.hi[i];
      c.d = f.diag[i];
      c.s = f.shift[i];
      if (c.d == 0) throw Error(ErrorKind::kConfigError, "scanner: singular map");
      Rat exp = Rat(lambda_) * (weights[i] + 1);
      if (!is_integer(exp) || !exp.get_num().fits_ulong_p()) {
        throw Error(ErrorKind::kConfigError, "scanner: weight exponent not integral");
      }
      c.pow_exp = exp.get_num().get_ui();

      Rat e1 = (c.lo - c.s) / c.d;
      Rat e2 = (c.hi - c.s) / c.d;
      Rat alpha = e1 < e2 ? e1 : e2;
      Rat beta = e1 < e2 ? e2 : e1;
      Rat gamma = c_prime / abs(c.d);

      Int D(1);
      mpz_lcm(D.get_mpz_t(), alpha.get_den().get_mpz_t(), beta.get_den().get_mpz_t());
      mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), gamma.get_den().get_mpz_t());
      c.D = D;
      c.An = alpha.get_num() * (D / alpha.get_den());
      c.Bn = beta.get_num() * (D / beta.get_den());
      c.Cn = gamma.get_num() * (D / gamma.get_den());
      coords_.push_back(std::move(c));
    }
  }

  const Int& lambda() const { return lambda_; }
  const std::vector<CoordData>& coords() const { return coords_; }

  // Visits every (p, q) with q_lo <= q <= q_hi passing the exact reach test
  // in each retained coordinate, ascending in q then lexicographic in p.
  // p is reported in retained-coordinate order.  Stops early when the
  // visitor returns false.
  void scan(Int q_lo, const Int& q_hi,
            const std::function<bool(const std::vector<Int>&, const Int&)>& visit) const;

 private:
  bool coord_pass(const CoordData& c, const Int& p, const Int& q) const {
    Rat pr(p, q);
    pr.canonicalize();
    Rat g = interval_dist(c.lo, c.hi, Rat(c.d * pr + c.s));
    if (g == 0) return true;
    // g^lambda * q^{lambda(1+r)} < c'^lambda, cross-multiplied in integers.
    unsigned long lam = lambda_.get_ui();
    Int lhs, rhs, t;
    mpz_pow_ui(lhs.get_mpz_t(), g.get_num().get_mpz_t(), lam);
    mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), c.pow_exp);
    lhs *= t;
    mpz_pow_ui(t.get_mpz_t(), c_prime_.get_den().get_mpz_t(), lam);
    lhs *= t;
    mpz_pow_ui(rhs.get_mpz_t(), c_prime_.get_num().get_mpz_t(), lam);
    mpz_pow_ui(t.get_mpz_t(), g.get_den().get_mpz_t(), lam);
    rhs *= t;
    return lhs < rhs;
  }

  // Exact-filters the raw integer ranges and emits the cartesian product.
  // Returns false when the visitor stopped the scan.
  bool emit(const Int& q, const std::vector<Int>& pmin, const std::vector<Int>& pmax,
            const std::function<bool(const std::vector<Int>&, const Int&)>& visit) const {
    const std::size_t m = coords_.size();
    std::vector<std::vector<Int>> cand(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (Int p = pmin[j]; p <= pmax[j]; ++p) {
        if (coord_pass(coords_[j], p, q)) cand[j].push_back(p);
      }
      if (cand[j].empty()) return true;
    }
    std::vector<std::size_t> idx(m, 0);
    std::vector<Int> p(m);
    for (;;) {
      for (std::size_t j = 0; j < m; ++j) p[j] = cand[j][idx[j]];
      if (!visit(p, q)) return false;
      std::size_t j = m;
      while (j > 0) {
        --j;
        if (++idx[j] < cand[j].size()) break;
        idx[j] = 0;
        if (j == 0) return true;
      }
      if (j == 0 && idx[0] == 0) return true;
    }
  }

  Rat c_prime_;
  Int lambda_;
  std::vector<CoordData> coords_;
};

void DangerScanner::scan(
    Int q_lo, const Int& q_hi,
    const std::function<bool(const std::vector<Int>&, const Int&)>& visit) const {
  if (q_lo < 1) q_lo = 1;
  if (q_hi < q_lo) return;
  const std::size_t m = coords_.size();

  // Floor-division state: for X(q) = q*An - Cn (lower) and W(q) = q*Bn + Cn - 1
  // (upper), keep X = uq*D + ur with 0 <= ur < D.  Candidates are uq+1 .. wq.
  std::vector<Int> uq(m), ur(m), wq(m), wr(m), ad(m), am(m), bd(m), bm(m);
  for (std::size_t j = 0; j < m; ++j) {
    const CoordData& c = coords_[j];
    Int U = q_lo * c.An - c.Cn;
    mpz_fdiv_qr(uq[j].get_mpz_t(), ur[j].get_mpz_t(), U.get_mpz_t(), c.D.get_mpz_t());
    Int W = q_lo * c.Bn + c.Cn - 1;
    mpz_fdiv_qr(wq[j].get_mpz_t(), wr[j].get_mpz_t(), W.get_mpz_t(), c.D.get_mpz_t());
    mpz_fdiv_qr(ad[j].get_mpz_t(), am[j].get_mpz_t(), c.An.get_mpz_t(), c.D.get_mpz_t());
    mpz_fdiv_qr(bd[j].get_mpz_t(), bm[j].get_mpz_t(), c.Bn.get_mpz_t(), c.D.get_mpz_t());
  }

  // Fast path feasibility: all state fits in 64/128-bit integers through the
  // end of the scan.
  bool fast = q_hi.fits_ulong_p();
  for (std::size_t j = 0; j < m && fast; ++j) {
    const CoordData& c = coords_[j];
    Int uq_end = (q_hi * c.An - c.Cn) / c.D;
    Int wq_end = (q_hi * c.Bn + c.Cn - 1) / c.D;
    fast = fits_u128(c.D) && fits_i64_magnitude(ad[j]) && fits_i64_magnitude(bd[j]) &&
           fits_i64_magnitude(uq[j]) && fits_i64_magnitude(wq[j]) &&
           fits_i64_magnitude(uq_end) && fits_i64_magnitude(wq_end);
  }

  std::vector<Int> pmin(m), pmax(m);
  if (fast) {
    constexpr std::size_t kMax = 16;
    if (m > kMax) throw Error(ErrorKind::kConfigError, "scanner: too many coordinates");
    i64 fuq[kMax], fwq[kMax], fad[kMax], fbd[kMax];
    u128 fur[kMax], fwr[kMax], fam[kMax], fbm[kMax], fD[kMax];
    for (std::size_t j = 0; j < m; ++j) {
      fuq[j] = uq[j].get_si();
      fwq[j] = wq[j].get_si();
      fad[j] = ad[j].get_si();
      fbd[j] = bd[j].get_si();
      fur[j] = u128_from_mpz(ur[j]);
      fwr[j] = u128_from_mpz(wr[j]);
      fam[j] = u128_from_mpz(am[j]);
      fbm[j] = u128_from_mpz(bm[j]);
      fD[j] = u128_from_mpz(coords_[j].D);
    }
    const unsigned long q0 = q_lo.get_ui();
    const unsigned long q1 = q_hi.get_ui();
    for (unsigned long q = q0;; ++q) {
      bool open = true;
      for (std::size_t j = 0; j < m; ++j) {
        if (fwq[j] < fuq[j] + 1) {
          open = false;
          break;
        }
      }
      if (open) {
        Int qz(q);
        for (std::size_t j = 0; j < m; ++j) {
          pmin[j] = Int(fuq[j] + 1);
          pmax[j] = Int(fwq[j]);
        }
        if (!emit(qz, pmin, pmax, visit)) return;
      }
      if (q == q1) break;
      for (std::size_t j = 0; j < m; ++j) {
        fuq[j] += fad[j];
        fur[j] += fam[j];
        if (fur[j] >= fD[j]) {
          fur[j] -= fD[j];
          ++fuq[j];
        }
        fwq[j] += fbd[j];
        fwr[j] += fbm[j];
        if (fwr[j] >= fD[j]) {
          fwr[j] -= fD[j];
          ++fwq[j];
        }
      }
    }
    return;
  }

  // Arbitrary-precision path: identical loop on mpz state.
  for (Int q = q_lo;; ++q) {
    bool open = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (wq[j] < uq[j] + 1) {
        open = false;
        break;
      }
    }
    if (open) {
      for (std::size_t j = 0; j < m; ++j) {
        pmin[j] = uq[j] + 1;
        pmax[j] = wq[j];
      }
      if (!emit(q, pmin, pmax, visit)) return;
    }
    if (q == q_hi) break;
    for (std::size_t j = 0; j < m; ++j) {
      const Int& D = coords_[j].D;
      uq[j] += ad[j];
      ur[j] += am[j];
      if (ur[j] >= D) {
        ur[j] -= D;
        ++uq[j];
      }
      wq[j] += bd[j];
      wr[j] += bm[j];
      if (wr[j] >= D) {
        wr[j] -= D;
        ++wq[j];
      }
    }
  }
}

Int vector_gcd_with(const std::vector<Int>& p, const Int& q) {
  Int g = q;
  for (const Int& x : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Round q-ranges on the strategy's clock: round 1 owns nothing; round k >= 2
// owns [ceil(2^((k-2)(a+b))), ceil(2^((k-1)(a+b)))].  Consecutive rounds
// overlap at one endpoint, so after K rounds all q <= 2^((K-1)(a+b)) are
// covered.
void round_q_range(int k, const Rat& period, Int* q_lo, Int* q_hi) {
  if (k < 2) {
    *q_lo = 1;
    *q_hi = 0;
    return;
  }
  *q_lo = ceil_pow2(Rat(k - 2) * period);
  *q_hi = ceil_pow2(Rat(k - 1) * period);
}

}  // namespace

Vec DangerousRational::point() const {
  Vec v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat x(p[i], q);
    x.canonicalize();
    v[i] = x;
  }
  return v;
}

BadParams derive_params(const Weights& w, const AffineDiagonalMap& f, const Rat& a,
                        const Rat& b, const Rat& t1, const Rat& margin) {
  const std::size_t n = w.dim();
  if (f.dim() != n) throw Error(ErrorKind::kConfigError, "target map has wrong dimension");
  for (const Rat& d : f.diag) {
    if (d == 0) throw Error(ErrorKind::kConfigError, "target map must be invertible");
  }
  if (!f.has_dyadic_diag()) {
    throw Error(ErrorKind::kNonDyadic, "target map diagonal must be dyadic");
  }
  if (margin <= 0 || margin >= 1) {
    throw Error(ErrorKind::kConfigError, "margin must lie strictly between 0 and 1");
  }
  Profile prof = w.profile();
  if (a <= 0 || !prof.grid_valid(a)) {
    throw Error(ErrorKind::kBadAliceStep,
                "step a = " + rat_str(a) + " is not a positive grid-valid time");
  }
  for (const Rat& e : prof.exps) {
    if (a * e <= 1) {
      throw Error(ErrorKind::kBadAliceStep,
                  "step a = " + rat_str(a) + " is too small for exponent " + rat_str(e));
    }
  }
  if (b <= 0) throw Error(ErrorKind::kConfigError, "step b must be positive");
  if (!prof.grid_valid(b)) {
    throw Error(ErrorKind::kOffLattice, "step b = " + rat_str(b) + " is off-grid");
  }
  if (t1 <= 0) throw Error(ErrorKind::kConfigError, "t1 must be positive");
  if (!prof.grid_valid(t1)) {
    throw Error(ErrorKind::kOffLattice, "t1 = " + rat_str(t1) + " is off-grid");
  }

  // Least safe starting time t0 (a positive lattice multiple): deep enough
  // that every round's danger search space satisfies the simplex volume
  // condition, including the inclusive upper endpoint of the q-range.
  const Rat period = a + b;
  Rat fudge;
  if (is_integer(period)) {
    fudge = 1 + pow2(Int(-period.get_num()));
  } else {
    fudge = 1 + pow2(Int(1) - floor_rat(period));
  }
  const Rat jac = f.jacobian();
  const Rat lhs = pow2(static_cast<long>(n)) * Rat(factorial_int(n)) *
                  rat_pow(fudge, static_cast<unsigned long>(n + 1));
  const Int lam = w.lattice();
  Rat t0;
  bool found = false;
  for (int mlt = 1; mlt <= 4096; ++mlt) {
    t0 = Rat(lam) * mlt;
    Rat expo = t0 * static_cast<long>(n + 1);
    if (lhs < jac * pow2(Int(expo.get_num()))) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorKind::kConfigError, "no safe starting time below 4096 lattice steps");
  }
  if (t1 < t0) {
    throw Error(ErrorKind::kBadInitialTime,
                "t1 = " + rat_str(t1) + " is above the safe starting depth t0 = " +
                    rat_str(t0));
  }

  // c' = margin * min_i (1/2 - 2^(-a e_i)) * 2^(-t1 e_i) * 2^(-(a+b) e_i).
  Rat best;
  bool first = true;
  for (const Rat& e : prof.exps) {
    Rat ae = a * e, te = t1 * e, pe = period * e;
    Rat bound = (Rat(1, 2) - pow2(Int(-ae.get_num()))) * pow2(Int(-te.get_num())) *
                pow2(Int(-pe.get_num()));
    if (first || bound < best) {
      best = bound;
      first = false;
    }
  }
  BadParams sp{w, f, a, b, t1, margin, t0, Rat(margin * best)};
  return sp;
}

std::vector<DangerousRational> dangerous_rationals(const AxisBox& box, const Int& q_lo,
                                                   const Int& q_hi, const Weights& w,
                                                   const AffineDiagonalMap& f,
                                                   const Rat& c_prime) {
  DangerScanner scanner(box, w.r, f, c_prime);
  std::vector<DangerousRational> out;
  scanner.scan(q_lo, q_hi, [&](const std::vector<Int>& p, const Int& q) {
    if (vector_gcd_with(p, q) == 1) out.push_back(DangerousRational{p, q});
    return true;
  });
  return out;
}

std::optional<Hyperplane> avoidance_hyperplane(const std::vector<DangerousRational>& dangers,
                                               const AffineDiagonalMap& f) {
  if (dangers.empty()) return std::nullopt;
  std::vector<Vec> pts;
  pts.reserve(dangers.size());
  for (const DangerousRational& d : dangers) pts.push_back(f.apply(d.point()));
  return affine_hull_or_throw(pts);
}

RoundCertificate alice_bad_move(const GameBox& box, int k, const BadParams& sp,
                                const Session& session) {
  const std::size_t n = sp.w.dim();
  if (box.dim() != n) throw Error(ErrorKind::kConfigError, "box has wrong dimension");
  const Rat period = sp.a + sp.b;
  if (box.t != sp.t1 + period * (k - 1)) {
    throw Error(ErrorKind::kCertificateFailure,
                "box time " + rat_str(box.t) + " does not match round " + std::to_string(k));
  }

  RoundCertificate cert;
  cert.round = k;
  round_q_range(k, period, &cert.q_lo, &cert.q_hi);

  AxisBox ax = box.axis();
  if (k >= 2) {
    // Simplex volume precondition for the searched q-range, inclusive end.
    Rat lhs = pow2(static_cast<long>(n)) * ax.volume();
    Int npow;
    Int n1 = cert.q_hi + 1;
    mpz_pow_ui(npow.get_mpz_t(), n1.get_mpz_t(), static_cast<unsigned long>(n + 1));
    Rat rhs = sp.f.jacobian() / Rat(factorial_int(n) * npow);
    if (!(lhs < rhs)) {
      throw Error(ErrorKind::kCertificateFailure, "small-volume precondition failed");
    }
    cert.dangers = dangerous_rationals(ax, cert.q_lo, cert.q_hi, sp.w, sp.f, sp.c_prime);
  }
  if (!cert.dangers.empty()) cert.hyperplane = avoidance_hyperplane(cert.dangers, sp.f);

  AxisBox allowed = allowed_centers(box, session, sp.a);
  Vec center = cert.hyperplane
                   ? max_abs_affine_over_box(*cert.hyperplane, allowed).argmax
                   : box.center;
  cert.reply = session.box_at(center, Rat(box.t + sp.a));

  if (cert.hyperplane) {
    // Exact avoidance margins: every point of the reply keeps an affine
    // distance from the danger hyperplane of at least the per-coordinate
    // margin sum, and at least the reach bound of this round's denominators.
    const Hyperplane& h = *cert.hyperplane;
    const Profile prof = sp.w.profile();
    Rat spread(0), margin_sum(0), reach_sum(0);
    for (std::size_t i = 0; i < n; ++i) {
      Rat ui = abs(h.normal[i]);
      spread += ui * cert.reply.halfside(i);
      Rat ae = sp.a * prof.exps[i];
      margin_sum += ui * box.halfside(i) * (Rat(1, 2) - pow2(Int(-ae.get_num())));
      Rat pe = period * prof.exps[i] * (k - 2);
      reach_sum += ui * sp.c_prime * pow2(Int(-pe.get_num()));
    }
    Rat vc = abs(h.eval(cert.reply.center));
    Rat min_abs = vc > spread ? Rat(vc - spread) : Rat(0);
    if (min_abs < margin_sum) {
      throw Error(ErrorKind::kCertificateFailure, "avoidance margin violated");
    }
    if (min_abs < reach_sum) {
      throw Error(ErrorKind::kCertificateFailure, "avoidance reach bound violated");
    }
  }

  // Exact re-verification: the reply admits no dangerous rational in this
  // round's range.
  if (cert.q_lo <= cert.q_hi) {
    DangerScanner checker(cert.reply.axis(), sp.w.r, sp.f, sp.c_prime);
    bool clean = true;
    checker.scan(cert.q_lo, cert.q_hi, [&](const std::vector<Int>&, const Int&) {
      clean = false;
      return false;
    });
    if (!clean) {
      throw Error(ErrorKind::kCertificateFailure, "reply box fails exact re-verification");
    }
  }
  cert.verified = true;
  return cert;
}

BadStrategy::BadStrategy(Weights w, AffineDiagonalMap f, Rat a, Rat margin)
    : w_(std::move(w)), f_(std::move(f)), a_(std::move(a)), margin_(std::move(margin)) {
  // Eager validation of everything that does not depend on b and t1.
  if (f_.dim() != w_.dim()) {
    throw Error(ErrorKind::kConfigError, "target map has wrong dimension");
  }
  for (const Rat& d : f_.diag) {
    if (d == 0) throw Error(ErrorKind::kConfigError, "target map must be invertible");
  }
  if (!f_.has_dyadic_diag()) {
    throw Error(ErrorKind::kNonDyadic, "target map diagonal must be dyadic");
  }
  if (margin_ <= 0 || margin_ >= 1) {
    throw Error(ErrorKind::kConfigError, "margin must lie strictly between 0 and 1");
  }
  Profile prof = w_.profile();
  if (a_ <= 0 || !prof.grid_valid(a_)) {
    throw Error(ErrorKind::kBadAliceStep,
                "step a = " + rat_str(a_) + " is not a positive grid-valid time");
  }
  for (const Rat& e : prof.exps) {
    if (a_ * e <= 1) {
      throw Error(ErrorKind::kBadAliceStep,
                  "step a = " + rat_str(a_) + " is too small for exponent " + rat_str(e));
    }
  }
}

void BadStrategy::start(const Session& session, const GameBox&) {
  session_ = &session;
  certs_.clear();
  if (!session.weights() || !(*session.weights() == w_)) {
    throw Error(ErrorKind::kConfigError, "session weights do not match the strategy");
  }
  for (const Rat& s : session.domain()) {
    if (s != 1) {
      throw Error(ErrorKind::kConfigError,
                  "avoidance strategy requires a unit domain; wrap it in a transport");
    }
  }
  if (session.params().a != a_) {
    throw Error(ErrorKind::kConfigError, "session step a does not match the strategy");
  }
  const Rat b = session.params().b;
  const Rat t1 = session.params().t1;
  const Rat period = a_ + b;

  // If play starts too shallow, wait with centered moves until the clock
  // reaches the safe depth, then derive constants for that effective start.
  Rat t1_eff = t1;
  active_from_ = 1;
  for (;;) {
    try {
      params_ = derive_params(w_, f_, a_, b, t1_eff, margin_);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBadInitialTime) throw;
      t1_eff += period;
      ++active_from_;
    }
  }
}

Strategy::Reply BadStrategy::reply(const GameBox& opponent, int round) {
  if (!session_ || !params_) {
    throw Error(ErrorKind::kConfigError, "strategy used before start");
  }
  if (round < active_from_) {
    RoundCertificate cert;
    cert.round = round;
    cert.reply = session_->box_at(opponent.center, Rat(opponent.t + a_));
    cert.verified = true;
    certs_.push_back(cert);
    return {cert.reply, {}};
  }
  int k = round - active_from_ + 1;
  RoundCertificate cert = alice_bad_move(opponent, k, *params_, *session_);
  cert.round = round;
  certs_.push_back(cert);
  MoveNote note;
  note.danger_count = static_cast<long>(cert.dangers.size());
  note.hyperplane = cert.hyperplane;
  if (cert.q_lo <= cert.q_hi) {
    note.q_lo = cert.q_lo;
    note.q_hi = cert.q_hi;
  }
  note.verified = cert.verified;
  return {certs_.back().reply, std::move(note)};
}

std::shared_ptr<BadStrategy> make_bad_strategy(const Weights& w, const AffineDiagonalMap& f,
                                               const Rat& a, const Rat& margin) {
  return std::make_shared<BadStrategy>(w, f, a, margin);
}

std::optional<Violation> verify_box(const AxisBox& box, const std::vector<Rat>& weights,
                                    const Rat& c_prime, const Int& q_max,
                                    const AffineDiagonalMap& f) {
  if (q_max < 1) return std::nullopt;
  Rat sum(0);
  for (const Rat& wi : weights) sum += wi;
  if (sum != 1) {
    throw Error(ErrorKind::kConfigError, "verification weights must sum to 1");
  }
  DangerScanner scanner(box, weights, f, c_prime);
  bool all_positive = true;
  for (const Rat& wi : weights) {
    if (wi == 0) all_positive = false;
  }

  std::optional<Violation> hit;
  scanner.scan(Int(1), q_max, [&](const std::vector<Int>& p, const Int& q) {
    if (all_positive && vector_gcd_with(p, q) != 1) return true;  // reduced form came first
    Violation v;
    v.q = q;
    v.p.resize(weights.size());
    Vec center = box.center();
    std::size_t jr = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] > 0) {
        v.p[i] = p[jr++];
      } else {
        v.p[i] = round_half_up(Rat(center[i] * q));
      }
    }
    hit = std::move(v);
    return false;
  });
  return hit;
}

BadnessScore badness_score(const Vec& x, const Int& q_max,
                           const std::vector<Rat>& weights, int bisect_steps) {
  const std::size_t n = weights.size();
  if (x.size() != n) throw Error(ErrorKind::kConfigError, "point has wrong dimension");
  if (q_max < 1) throw Error(ErrorKind::kConfigError, "q_max must be at least 1");
  Rat sum(0);
  for (const Rat& wi : weights) {
    if (sgn(wi) < 0) throw Error(ErrorKind::kConfigError, "weights must be nonnegative");
    sum += wi;
  }
  if (sum != 1) throw Error(ErrorKind::kConfigError, "weights must sum to 1");

  // Floating-point estimate: min over q of q * max_i |q x_i - p_i|^(1/r_i),
  // the max taken over coordinates with positive weight.
  double est = std::numeric_limits<double>::infinity();
  std::vector<double> xr(n), rr(n);
  for (std::size_t i = 0; i < n; ++i) {
    xr[i] = to_double(x[i]);
    rr[i] = to_double(weights[i]);
  }
  const double qmaxd = to_double(Rat(q_max));
  for (double q = 1; q <= qmaxd; ++q) {
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rr[i] == 0) continue;
      double d = std::abs(q * xr[i] - std::round(q * xr[i]));
      worst = std::max(worst, std::pow(d, 1.0 / rr[i]));
    }
    est = std::min(est, q * worst);
  }

  // Certified dyadic lower bound by bisection against the exact oracle.
  AxisBox pt;
  pt.lo = x;
  pt.hi = x;
  AffineDiagonalMap id = AffineDiagonalMap::identity(n);
  auto passes = [&](const Rat& c) {
    return c == 0 || !verify_box(pt, weights, c, q_max, id).has_value();
  };
  Rat lo(0), hi(1);
  if (passes(hi)) {
    lo = hi;  // everything below 1 is certified; scores cap at 1 on our inputs
  } else {
    for (int s = 0; s < bisect_steps; ++s) {
      Rat mid = (lo + hi) / 2;
      if (passes(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  return BadnessScore{est, lo};
}

std::optional<DirichletWitness> dirichlet_witness(const Vec& x, const Int& q_min,
                                                  const Int& n_bound, const Weights& w) {
  const std::size_t n = w.dim();
  if (x.size() != n) throw Error(ErrorKind::kConfigError, "point has wrong dimension");
  if (q_min < 1) throw Error(ErrorKind::kConfigError, "q_min must be at least 1");
  const Int lam = w.lattice();
  if (!lam.fits_ulong_p()) {
    throw Error(ErrorKind::kConfigError, "weight lattice too large");
  }
  const unsigned long lamu = lam.get_ui();
  std::vector<unsigned long> rexp(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat e = Rat(lam) * w.r[i];
    rexp[i] = e.get_num().get_ui();  // lambda * r_i, an integer by construction
  }

  // Incremental q*x to avoid a multiplication per step.
  Vec qx(n);
  for (std::size_t i = 0; i < n; ++i) qx[i] = x[i] * Rat(q_min);
  for (Int q = q_min; q < n_bound; ++q) {
    bool good = true;
    std::vector<Int> p(n);
    Vec dist(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = round_half_up(qx[i]);
      dist[i] = abs(Rat(qx[i] - Rat(p[i])));
      // |q x_i - p_i|^lambda * q^(lambda r_i) < 1, cross-multiplied.
      Int lhs, t;
      mpz_pow_ui(lhs.get_mpz_t(), dist[i].get_num().get_mpz_t(), lamu);
      mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), rexp[i]);
      lhs *= t;
      Int rhs;
      mpz_pow_ui(rhs.get_mpz_t(), dist[i].get_den().get_mpz_t(), lamu);
      if (!(lhs < rhs)) {
        good = false;
        break;
      }
    }
    if (good) return DirichletWitness{q, std::move(p), std::move(dist)};
    for (std::size_t i = 0; i < n; ++i) qx[i] += x[i];
  }
  return std::nullopt;
}

}  // namespace msgame
