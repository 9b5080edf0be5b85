// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/strategies.hpp"

#include <algorithm>
#include <utility>

#include "msgame/errors.hpp"

namespace msgame {

namespace {

Vec ones(std::size_t n) { return Vec(n, Rat(1)); }

Rat pow2_rat(long e) { return pow2(Int(e)); }

// 2^(-e*t) as an exact rational; pre: e*t is an integer.
Rat shrink(const Rat& e, const Rat& t) {
  Rat p = e * t;
  if (!is_integer(p)) throw Error(ErrorKind::kConfigError, "non-integral shrink exponent");
  return pow2(Int(-p.get_num()));
}

void check_positive_lattice(const Rat& t, const Int& lam, const char* what) {
  Rat scaled = t / Rat(lam);
  if (t <= 0 || !is_integer(scaled)) {
    throw Error(ErrorKind::kOffLattice, std::string(what) + " = " + rat_str(t) +
                                            " is not a positive multiple of the lattice " +
                                            int_str(lam));
  }
}

}  // namespace

int interleave_component(long k, int m) {
  if (k < 1 || m < 1) throw Error(ErrorKind::kConfigError, "round and count must be positive");
  int i = __builtin_ctzl(static_cast<unsigned long>(k)) + 1;
  return i <= m ? i : 0;
}

InterleaveStrategy::InterleaveStrategy(std::vector<std::shared_ptr<Strategy>> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw Error(ErrorKind::kConfigError, "no components to interleave");
  for (const auto& c : comps_) {
    if (!c) throw Error(ErrorKind::kConfigError, "null component strategy");
  }
}

void InterleaveStrategy::start(const Session& session, const GameBox&) {
  session_ = &session;
  const GameParams& p = session.params();
  const Rat period = p.a + p.b;
  vsessions_.clear();
  started_.assign(comps_.size(), false);
  rounds_.assign(comps_.size(), {});
  for (std::size_t i = 1; i <= comps_.size(); ++i) {
    GameParams vp;
    vp.a = p.a;
    vp.b = pow2_rat(static_cast<long>(i)) * period - p.a;
    vp.t1 = p.t1 + (pow2_rat(static_cast<long>(i) - 1) - 1) * period;
    vp.a_star = p.a_star;
    vsessions_.push_back(
        Session::derived(session.profile(), session.weights(), vp, session.domain()));
  }
}

Strategy::Reply InterleaveStrategy::reply(const GameBox& opponent, int round) {
  if (!session_) throw Error(ErrorKind::kConfigError, "strategy not started");
  int i = interleave_component(round, count());
  if (i == 0) {
    // Filler rounds: recenter and keep shrinking.
    return {session_->box_at(opponent.center, opponent.t + session_->params().a), {}};
  }
  std::size_t idx = static_cast<std::size_t>(i - 1);
  const Session& vs = vsessions_[idx];
  if (!started_[idx]) {
    if (opponent.t != vs.params().t1) {
      throw Error(ErrorKind::kConfigError, "component opening at unexpected time");
    }
    comps_[idx]->start(vs, opponent);
    started_[idx] = true;
  }
  long stride = 1L << i;
  long offset = 1L << (i - 1);
  int inner_round = static_cast<int>((round - offset) / stride) + 1;
  rounds_[idx].push_back(round);
  return comps_[idx]->reply(opponent, inner_round);
}

const std::shared_ptr<Strategy>& InterleaveStrategy::component(int i) const {
  if (i < 1 || i > count()) throw Error(ErrorKind::kConfigError, "component index out of range");
  return comps_[static_cast<std::size_t>(i - 1)];
}

GameParams InterleaveStrategy::virtual_params(int i) const {
  return virtual_session(i).params();
}

const Session& InterleaveStrategy::virtual_session(int i) const {
  if (i < 1 || i > count() || vsessions_.size() != comps_.size()) {
    throw Error(ErrorKind::kConfigError, "component session not available");
  }
  return vsessions_[static_cast<std::size_t>(i - 1)];
}

const std::vector<int>& InterleaveStrategy::rounds_of(int i) const {
  if (i < 1 || i > count() || rounds_.size() != comps_.size()) {
    throw Error(ErrorKind::kConfigError, "component index out of range");
  }
  return rounds_[static_cast<std::size_t>(i - 1)];
}

std::shared_ptr<InterleaveStrategy> interleave_strategies(
    std::vector<std::shared_ptr<Strategy>> components) {
  return std::make_shared<InterleaveStrategy>(std::move(components));
}

PartitionStrategy::PartitionStrategy(std::vector<PartitionBlock> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorKind::kConfigError, "empty partition");
  for (const auto& b : blocks_) {
    if (!b.strategy) throw Error(ErrorKind::kConfigError, "null block strategy");
    if (b.indices.empty() || !std::is_sorted(b.indices.begin(), b.indices.end()) ||
        std::adjacent_find(b.indices.begin(), b.indices.end()) != b.indices.end()) {
      throw Error(ErrorKind::kConfigError, "block indices must be strictly increasing");
    }
  }
}

void PartitionStrategy::start(const Session& session, const GameBox& opening) {
  session_ = &session;
  const std::size_t n = session.dim();
  std::vector<bool> seen(n, false);
  std::size_t total = 0;
  for (const auto& b : blocks_) {
    for (std::size_t i : b.indices) {
      if (i >= n || seen[i]) {
        throw Error(ErrorKind::kConfigError, "blocks must partition the coordinates");
      }
      seen[i] = true;
      ++total;
    }
  }
  if (total != n) throw Error(ErrorKind::kConfigError, "blocks must partition the coordinates");

  bsessions_.clear();
  for (const auto& b : blocks_) {
    Vec dom(b.indices.size());
    for (std::size_t j = 0; j < b.indices.size(); ++j) dom[j] = session.domain()[b.indices[j]];
    std::optional<Weights> w;
    if (b.indices.size() == n && session.weights()) w = session.weights();
    bsessions_.push_back(Session::derived(session.profile().restrict(b.indices), std::move(w),
                                          session.params(), std::move(dom)));
  }
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const auto& idx = blocks_[bi].indices;
    Vec c(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) c[j] = opening.center[idx[j]];
    blocks_[bi].strategy->start(bsessions_[bi], bsessions_[bi].box_at(c, opening.t));
  }
}

Strategy::Reply PartitionStrategy::reply(const GameBox& opponent, int round) {
  if (!session_) throw Error(ErrorKind::kConfigError, "strategy not started");
  const Rat t_next = opponent.t + session_->params().a;
  Vec full(session_->dim());
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const auto& idx = blocks_[bi].indices;
    Vec c(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) c[j] = opponent.center[idx[j]];
    Reply r = blocks_[bi].strategy->reply(bsessions_[bi].box_at(c, opponent.t), round);
    if (r.box.t != t_next) {
      throw Error(ErrorKind::kConfigError, "block reply at unexpected time");
    }
    for (std::size_t j = 0; j < idx.size(); ++j) full[idx[j]] = r.box.center[j];
  }
  return {session_->box_at(full, t_next), {}};
}

const Session& PartitionStrategy::block_session(std::size_t b) const {
  if (b >= bsessions_.size()) throw Error(ErrorKind::kConfigError, "block index out of range");
  return bsessions_[b];
}

std::shared_ptr<PartitionStrategy> product_strategy(std::shared_ptr<Strategy> s1,
                                                    std::shared_ptr<Strategy> s2,
                                                    std::size_t split, std::size_t dim) {
  if (split == 0 || split >= dim) {
    throw Error(ErrorKind::kConfigError, "both factors must be nonempty");
  }
  std::vector<PartitionBlock> blocks(2);
  for (std::size_t i = 0; i < split; ++i) blocks[0].indices.push_back(i);
  for (std::size_t i = split; i < dim; ++i) blocks[1].indices.push_back(i);
  blocks[0].strategy = std::move(s1);
  blocks[1].strategy = std::move(s2);
  return std::make_shared<PartitionStrategy>(std::move(blocks));
}

ScaledClockStrategy::ScaledClockStrategy(std::shared_ptr<Strategy> inner, Weights inner_weights,
                                         Rat kappa)
    : inner_(std::move(inner)), inner_w_(std::move(inner_weights)), kappa_(std::move(kappa)) {
  if (!inner_) throw Error(ErrorKind::kConfigError, "null inner strategy");
  if (kappa_ <= 0) throw Error(ErrorKind::kConfigError, "clock factor must be positive");
}

void ScaledClockStrategy::start(const Session& session, const GameBox& opening) {
  session_ = &session;
  const std::size_t n = session.dim();
  if (inner_w_.dim() != n) {
    throw Error(ErrorKind::kConfigError, "inner weights have wrong dimension");
  }
  for (const Rat& s : session.domain()) {
    if (s != 1) throw Error(ErrorKind::kConfigError, "rescaled clocks require a unit domain");
  }
  Profile inner_prof = inner_w_.profile();
  for (std::size_t i = 0; i < n; ++i) {
    if (inner_prof.exps[i] != session.profile().exps[i] * kappa_) {
      throw Error(ErrorKind::kConfigError,
                  "inner weights do not rescale the outer box family");
    }
  }
  GameParams ip;
  ip.a = session.params().a / kappa_;
  ip.b = session.params().b / kappa_;
  ip.t1 = session.params().t1 / kappa_;
  for (const Rat* t : {&ip.a, &ip.b, &ip.t1}) {
    if (!inner_prof.grid_valid(*t)) {
      throw Error(ErrorKind::kLatticeClash,
                  "rescaled time " + rat_str(*t) + " leaves the inner grid");
    }
  }
  if (!inner_prof.grid_valid(opening.t / kappa_)) {
    throw Error(ErrorKind::kLatticeClash, "rescaled opening time leaves the inner grid");
  }
  isession_.clear();
  isession_.push_back(Session::derived(inner_prof, inner_w_, ip, ones(n)));
  inner_->start(isession_[0], isession_[0].box_at(opening.center, opening.t / kappa_));
}

Strategy::Reply ScaledClockStrategy::reply(const GameBox& opponent, int round) {
  if (!session_ || isession_.empty()) {
    throw Error(ErrorKind::kConfigError, "strategy not started");
  }
  Reply r = inner_->reply(isession_[0].box_at(opponent.center, opponent.t / kappa_), round);
  const Rat t_next = opponent.t + session_->params().a;
  if (r.box.t != t_next / kappa_) {
    throw Error(ErrorKind::kConfigError, "inner reply at unexpected time");
  }
  return {session_->box_at(r.box.center, t_next), std::move(r.note)};
}

const Session& ScaledClockStrategy::inner_session() const {
  if (isession_.empty()) throw Error(ErrorKind::kConfigError, "strategy not started");
  return isession_[0];
}

namespace {

// Common mechanics of porting a unit-cube strategy to another arena: a box
// at outer time tau maps to an inner unit-family box at tau + s and back.
class TransportBase : public Strategy {
 public:
  TransportBase(std::shared_ptr<Strategy> inner, Weights w, GameParams inner_params, Rat s)
      : inner_(std::move(inner)), w_(std::move(w)), ip_(std::move(inner_params)),
        s_(std::move(s)) {}

  void start(const Session& session, const GameBox& opening) override {
    session_ = &session;
    if (session.dim() != w_.dim()) {
      throw Error(ErrorKind::kConfigError, "session has wrong dimension");
    }
    if (session.params().a != ip_.a + 2 * s_ || session.params().b != ip_.b - 2 * s_) {
      throw Error(ErrorKind::kConfigError, "session steps do not match the ported strategy");
    }
    GameParams inner = ip_;
    inner.t1 = session.params().t1 + s_;
    isession_.clear();
    isession_.push_back(Session::weighted(w_, inner));
    inner_->start(isession_[0],
                  isession_[0].box_at(pull_center(opening.center), opening.t + s_));
  }

  Reply reply(const GameBox& opponent, int round) override {
    if (!session_ || isession_.empty()) {
      throw Error(ErrorKind::kConfigError, "strategy not started");
    }
    Reply r = inner_->reply(
        isession_[0].box_at(pull_center(opponent.center), opponent.t + s_), round);
    const Rat t_next = opponent.t + session_->params().a;
    if (r.box.t != opponent.t + s_ + ip_.a) {
      throw Error(ErrorKind::kConfigError, "inner reply at unexpected time");
    }
    return {session_->box_at(push_center(r.box.center), t_next), std::move(r.note)};
  }

 protected:
  virtual Vec pull_center(const Vec& c) const = 0;
  virtual Vec push_center(const Vec& c) const = 0;

  std::shared_ptr<Strategy> inner_;
  Weights w_;
  GameParams ip_;
  Rat s_;
  const Session* session_ = nullptr;
  std::vector<Session> isession_;
};

class DomainTransport final : public TransportBase {
 public:
  using TransportBase::TransportBase;
  std::string name() const override { return "transport-domain"; }

 protected:
  Vec pull_center(const Vec& c) const override { return c; }
  Vec push_center(const Vec& c) const override { return c; }
};

class AffineTransport final : public TransportBase {
 public:
  AffineTransport(std::shared_ptr<Strategy> inner, Weights w, GameParams inner_params, Rat s,
                  AffineDiagonalMap f)
      : TransportBase(std::move(inner), std::move(w), std::move(inner_params), std::move(s)),
        f_(std::move(f)) {}

  std::string name() const override { return "transport-affine"; }

 protected:
  Vec pull_center(const Vec& c) const override { return f_.apply_inverse(c); }
  Vec push_center(const Vec& c) const override { return f_.apply(c); }

 private:
  AffineDiagonalMap f_;
};

// Least s in lattice * {0, 1, 2, ...} with 2^(-e_i s) <= bound_i for all i.
Rat least_shift(const Weights& w, const std::vector<Rat>& bounds) {
  const Int lam = w.lattice();
  for (long m = 0; m <= 4096; ++m) {
    Rat s = Rat(lam) * m;
    bool ok = true;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      if (shrink(Rat(1) + w.r[i], s) > bounds[i]) {
        ok = false;
        break;
      }
    }
    if (ok) return s;
  }
  throw Error(ErrorKind::kConfigError, "no admissible transport shift");
}

GameParams make_outer_params(const Weights& w, const GameParams& ip, const Rat& s) {
  const Rat a_star = Rat(w.lattice());
  if (ip.b - 2 * s <= a_star) {
    throw Error(ErrorKind::kStepExhausted,
                "transported step b = " + rat_str(ip.b - 2 * s) +
                    " does not exceed the floor " + rat_str(a_star));
  }
  GameParams op;
  op.a = ip.a + 2 * s;
  op.b = ip.b - 2 * s;
  op.t1 = ip.t1;
  op.a_star = a_star;
  return op;
}

void check_inner_params(const Weights& w, const GameParams& ip) {
  const Int lam = w.lattice();
  check_positive_lattice(ip.a, lam, "step a");
  check_positive_lattice(ip.b, lam, "step b");
  check_positive_lattice(ip.t1, lam, "time t1");
}

}  // namespace

TransportResult transport_domain(std::shared_ptr<Strategy> inner, const Weights& w,
                                 const GameParams& inner_params,
                                 const std::vector<Rat>& outer_domain) {
  if (!inner) throw Error(ErrorKind::kConfigError, "null inner strategy");
  if (outer_domain.size() != w.dim()) {
    throw Error(ErrorKind::kConfigError, "domain has wrong dimension");
  }
  check_inner_params(w, inner_params);
  std::vector<Rat> bounds(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const Rat& d = outer_domain[i];
    if (d <= 0) throw Error(ErrorKind::kConfigError, "domain sides must be positive");
    Rat inv = Rat(1) / d;
    bounds[i] = d < inv ? d : inv;
  }
  Rat s = least_shift(w, bounds);
  GameParams op = make_outer_params(w, inner_params, s);
  auto strat = std::make_shared<DomainTransport>(std::move(inner), w, inner_params, s);
  return TransportResult{std::move(strat), op, s};
}

TransportResult transport_affine(std::shared_ptr<Strategy> inner, const Weights& w,
                                 const GameParams& inner_params, const AffineDiagonalMap& f) {
  if (!inner) throw Error(ErrorKind::kConfigError, "null inner strategy");
  if (f.dim() != w.dim()) throw Error(ErrorKind::kConfigError, "map has wrong dimension");
  check_inner_params(w, inner_params);
  std::vector<Rat> bounds(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Rat d = abs(f.diag[i]);
    if (d == 0) throw Error(ErrorKind::kConfigError, "map diagonal must be nonsingular");
    Rat inv = Rat(1) / d;
    bounds[i] = d < inv ? d : inv;
  }
  Rat s = least_shift(w, bounds);
  GameParams op = make_outer_params(w, inner_params, s);
  auto strat = std::make_shared<AffineTransport>(std::move(inner), w, inner_params, s, f);
  return TransportResult{std::move(strat), op, s};
}

GameParams classic_adapter(const Rat& alpha, const Rat& beta, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kConfigError, "dimension must be positive");
  if (alpha <= 0 || alpha >= 1 || beta <= 0 || beta >= 1) {
    throw Error(ErrorKind::kConfigError, "radii factors must lie in (0, 1)");
  }
  GameParams p;
  const long lam = static_cast<long>(n);
  const Rat* in[2] = {&alpha, &beta};
  Rat* out[2] = {&p.a, &p.b};
  for (int j = 0; j < 2; ++j) {
    auto e = exact_log2(*in[j]);
    if (!e || *e >= 0 || (-*e) % lam != 0) {
      throw Error(ErrorKind::kOffLattice,
                  rat_str(*in[j]) + " is not a lattice-compatible power of two");
    }
    *out[j] = Rat(-*e);
  }
  p.t1 = Rat(lam);
  return p;
}

}  // namespace msgame
