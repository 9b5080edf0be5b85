// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "msgame/errors.hpp"

namespace msgame {

namespace {

Rat box_volume(const GameBox& b) {
  Rat v(1);
  for (const Rat& s : b.sides) v *= s;
  return v;
}

Rat max_side(const GameBox& b) {
  Rat m = b.sides[0];
  for (const Rat& s : b.sides) m = std::max(m, s);
  return m;
}

// Interiors of two axis boxes meet iff they overlap with positive length on
// every axis.
bool interiors_meet(const GameBox& x, const GameBox& y) {
  AxisBox a = x.axis();
  AxisBox b = y.axis();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.hi[i] <= b.lo[i] || b.hi[i] <= a.lo[i]) return false;
  }
  return true;
}

double log2_rat(const Rat& x) {
  if (auto e = exact_log2(x)) return static_cast<double>(*e);
  return std::log2(to_double(x));
}

}  // namespace

MeasureModel measure_model(const Weights& w) {
  return MeasureModel{Rat(static_cast<long>(w.dim())) + 1, w.diameter_exponent(), Rat(1)};
}

std::vector<GameBox> pack_children(const GameBox& parent, const Rat& step,
                                   const Profile& prof) {
  const std::size_t n = parent.dim();
  if (prof.dim() != n) throw Error(ErrorKind::kConfigError, "profile has wrong dimension");
  if (step <= 0) throw Error(ErrorKind::kConfigError, "step must be positive");
  std::vector<unsigned long> counts(n);
  unsigned long total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rat e = prof.exps[i] * step;
    if (!is_integer(e)) {
      throw Error(ErrorKind::kOffLattice,
                  "step " + rat_str(step) + " does not tile axis " + std::to_string(i));
    }
    Rat cnt = pow2(Int(e.get_num()));
    if (!is_integer(cnt) || !cnt.get_num().fits_ulong_p()) {
      throw Error(ErrorKind::kConfigError, "tiling too fine on axis " + std::to_string(i));
    }
    counts[i] = cnt.get_num().get_ui();
    if (total > (1UL << 40) / std::max(counts[i], 1UL)) {
      throw Error(ErrorKind::kConfigError, "tiling box count out of budget");
    }
    total *= counts[i];
  }

  AxisBox pax = parent.axis();
  std::vector<GameBox> out;
  out.reserve(total);
  std::vector<unsigned long> idx(n, 0);
  for (unsigned long c = 0; c < total; ++c) {
    GameBox child;
    child.t = parent.t + step;
    child.center.resize(n);
    child.sides.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      child.sides[i] = parent.sides[i] / Rat(static_cast<long>(counts[i]));
      child.center[i] =
          pax.lo[i] + child.sides[i] * (Rat(2 * static_cast<long>(idx[i]) + 1) / 2);
    }
    out.push_back(std::move(child));
    // Odometer increment, last axis fastest.
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < counts[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

TreeLevels build_strategy_tree(Strategy& alice, const Session& session, int depth) {
  if (depth < 0) throw Error(ErrorKind::kConfigError, "depth must be nonnegative");
  TreeLevels tree;
  tree.opening = session.box_at(Vec(session.dim(), Rat(0)), session.params().t1);
  tree.levels.resize(static_cast<std::size_t>(depth) + 1);

  std::vector<GameBox> path = {tree.opening};
  std::function<void(int)> explore = [&](int level) {
    alice.start(session, path[0]);
    GameBox reply;
    for (std::size_t j = 0; j < path.size(); ++j) {
      reply = alice.reply(path[j], static_cast<int>(j) + 1).box;
    }
    tree.levels[static_cast<std::size_t>(level)].push_back(reply);
    if (level < depth) {
      for (GameBox& child : pack_children(reply, session.params().b, session.profile())) {
        path.push_back(std::move(child));
        explore(level + 1);
        path.pop_back();
      }
    }
  };
  explore(0);
  return tree;
}

TreeCheck check_treelike(const TreeLevels& tree, const MeasureModel& model) {
  TreeCheck rep;
  const auto& lv = tree.levels;
  if (lv.empty() || lv[0].empty()) {
    throw Error(ErrorKind::kConfigError, "tree has no levels");
  }

  for (std::size_t k = 0; k < lv.size(); ++k) {
    if (lv[k].empty()) rep.tl0 = false;
    Rat d(0);
    for (const GameBox& b : lv[k]) {
      if (box_volume(b) <= 0) rep.tl0 = false;
      d = std::max(d, max_side(b));
    }
    rep.diameters.push_back(d);
  }

  // TL1: pairwise interior disjointness, swept in lexicographic order of the
  // lower corner so grid levels separate after a few axis comparisons.
  for (std::size_t k = 0; k < lv.size() && rep.tl1; ++k) {
    std::vector<std::size_t> order(lv[k].size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return lv[k][x].axis().lo < lv[k][y].axis().lo;
    });
    for (std::size_t a = 0; a < order.size() && rep.tl1; ++a) {
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        const GameBox& first = lv[k][order[a]];
        const GameBox& second = lv[k][order[b]];
        if (second.axis().lo[0] >= first.axis().hi[0]) break;
        if (interiors_meet(first, second)) {
          rep.tl1 = false;
          rep.tl1_witness = {static_cast<int>(k), {order[a], order[b]}};
          break;
        }
      }
    }
  }

  // TL2 down from each level, TL3 up; parents found by exact containment.
  for (std::size_t k = 1; k < lv.size(); ++k) {
    std::vector<bool> has_child(lv[k - 1].size(), false);
    for (std::size_t j = 0; j < lv[k].size(); ++j) {
      bool nested = false;
      for (std::size_t p = 0; p < lv[k - 1].size(); ++p) {
        if (lv[k - 1][p].contains(lv[k][j])) {
          nested = true;
          has_child[p] = true;
          break;
        }
      }
      if (!nested && rep.tl2) {
        rep.tl2 = false;
        rep.tl2_witness = {static_cast<int>(k), j};
      }
    }
    for (std::size_t p = 0; p < has_child.size(); ++p) {
      if (!has_child[p] && rep.tl3) {
        rep.tl3 = false;
        rep.tl3_witness = {static_cast<int>(k - 1), p};
      }
    }
  }

  // STL: diameters strictly decrease, following the sigma-rate of the level
  // times when those are uniform.
  for (std::size_t k = 1; k < lv.size() && rep.stl; ++k) {
    if (lv[k].empty() || lv[k - 1].empty()) break;
    if (!(rep.diameters[k] < rep.diameters[k - 1])) {
      rep.stl = false;
      break;
    }
    const Rat& t_prev = lv[k - 1][0].t;
    const Rat& t_cur = lv[k][0].t;
    bool uniform = true;
    for (const GameBox& b : lv[k]) uniform = uniform && b.t == t_cur;
    for (const GameBox& b : lv[k - 1]) uniform = uniform && b.t == t_prev;
    if (uniform) {
      Rat e = model.sigma * (t_cur - t_prev);
      if (is_integer(e) && rep.diameters[k - 1] * pow2(Int(-e.get_num())) != rep.diameters[k]) {
        rep.stl = false;
      }
    }
  }
  return rep;
}

Rat delta_root(const TreeLevels& tree) {
  if (tree.levels.empty() || tree.levels[0].empty()) {
    throw Error(ErrorKind::kConfigError, "tree has no levels");
  }
  Rat covered(0);
  for (const GameBox& b : tree.levels[0]) covered += box_volume(b);
  return covered / box_volume(tree.opening);
}

Rat delta_k(const TreeLevels& tree, int k) {
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= tree.levels.size()) {
    throw Error(ErrorKind::kConfigError, "level k+1 not materialized");
  }
  const auto& parents = tree.levels[static_cast<std::size_t>(k)];
  const auto& children = tree.levels[static_cast<std::size_t>(k) + 1];
  if (parents.empty()) throw Error(ErrorKind::kConfigError, "empty tree level");
  Rat best(-1);
  for (const GameBox& p : parents) {
    Rat covered(0);
    for (const GameBox& c : children) {
      if (p.contains(c)) covered += box_volume(c);
    }
    Rat frac = covered / box_volume(p);
    if (best < 0 || frac < best) best = frac;
  }
  return best;
}

double urbanski_estimate(const TreeLevels& tree, double d_mu) {
  if (tree.levels.size() < 2) {
    throw Error(ErrorKind::kConfigError, "estimate needs at least two levels");
  }
  double sum = log2_rat(delta_root(tree));
  for (std::size_t k = 0; k + 1 < tree.levels.size(); ++k) {
    sum += log2_rat(delta_k(tree, static_cast<int>(k)));
  }
  Rat deepest(0);
  for (const GameBox& b : tree.levels.back()) deepest = std::max(deepest, max_side(b));
  return d_mu + sum / std::abs(log2_rat(deepest));
}

double urbanski_extrapolated(const Rat& delta, const Rat& sigma, const Rat& a, const Rat& b,
                             const Rat& t1, double d_mu, long k) {
  if (sigma <= 0 || k < 0) throw Error(ErrorKind::kConfigError, "bad extrapolation inputs");
  Rat depth_log = sigma * (t1 + Rat(k) * (a + b) + a);
  if (auto e = exact_log2(delta)) {
    return d_mu + to_double(Rat(*e) * Rat(k + 1) / depth_log);
  }
  return d_mu + std::log2(to_double(delta)) * static_cast<double>(k + 1) / to_double(depth_log);
}

double wd_bound(const Rat& a, const Rat& b, const Rat& c, const Rat& sigma, double d_mu) {
  if (c <= 0 || c > 1) throw Error(ErrorKind::kConfigError, "density must lie in (0, 1]");
  if (sigma <= 0 || a + b <= 0) throw Error(ErrorKind::kConfigError, "bad bound inputs");
  if (auto e = exact_log2(c)) {
    return d_mu + to_double(Rat(*e) / (sigma * (a + b)));
  }
  return d_mu + std::log2(to_double(c)) / to_double(sigma * (a + b));
}

FedererConstants federer_constants(const Rat& K, const Rat& alpha) {
  if (K < 1) throw Error(ErrorKind::kConfigError, "doubling constant must be at least 1");
  if (alpha <= 0 || alpha >= 1) {
    throw Error(ErrorKind::kConfigError, "contraction ratio must lie in (0, 1)");
  }
  // Least m with 3^(-m) <= alpha/2; uniqueness of the sandwich follows from
  // the factor-3 gap between the bounds.
  long m = 0;
  Rat p(1);  // 3^(-m)
  while (p > alpha / 2) {
    p /= 3;
    if (++m > 4096) throw Error(ErrorKind::kConfigError, "contraction ratio too small");
  }
  if (!(alpha / 6 < p)) throw Error(ErrorKind::kConfigError, "no sandwiched exponent");
  FedererConstants out;
  out.K = K;
  out.m = m;
  out.c_small = rat_pow(Rat(1) / K, static_cast<unsigned long>(m));
  out.c = out.c_small / (K * K);
  return out;
}

}  // namespace msgame
