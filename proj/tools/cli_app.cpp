// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msgame/adversaries.hpp"
#include "msgame/bad.hpp"
#include "msgame/dimension.hpp"
#include "msgame/errors.hpp"
#include "msgame/game.hpp"
#include "msgame/intersect.hpp"
#include "msgame/linalg.hpp"
#include "msgame/rational.hpp"
#include "msgame/ternary.hpp"
#include "msgame/transcript_io.hpp"

namespace msgame {
namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 2;
constexpr int kIllegal = 3;
constexpr int kConfigBad = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kIllegalMove:
      return kIllegal;
    case ErrorKind::kCertificateFailure:
    case ErrorKind::kFullDimensional:
      return kVerifyFailed;
    default:
      return kConfigBad;
  }
}

// Shared option bag; each subcommand binds the subset it uses.
struct Options {
  std::string weights;
  std::string a = "1";
  std::string b;        // defaults to a
  std::string t1;       // defaults to a
  std::string margin = "1/2";
  std::string f_diag;
  std::string f_shift;
  std::string bob = "seeded-random";
  std::string qmax;
  std::string cprime;
  std::string subsets;
  std::string out;
  std::string target;  // positional input of `verify`
  int rounds = 6;
  int depth = 3;
  int beta = 2;
  std::uint64_t seed = 0;
};

AffineDiagonalMap parse_map(const Options& o, std::size_t n) {
  if (o.f_diag.empty() && o.f_shift.empty()) return AffineDiagonalMap::identity(n);
  AffineDiagonalMap f;
  f.diag = o.f_diag.empty() ? AffineDiagonalMap::identity(n).diag
                            : parse_rat_list(o.f_diag);
  f.shift = o.f_shift.empty() ? Vec(n, Rat(0)) : parse_rat_list(o.f_shift);
  if (f.diag.size() != n || f.shift.size() != n) {
    throw Error(ErrorKind::kConfigError, "map dimensions do not match the weights");
  }
  return f;
}

struct Steps {
  Rat a;
  Rat b;
  Rat t1;
  Rat margin;
};

Steps parse_steps(const Options& o) {
  Steps s;
  s.a = parse_rat(o.a);
  s.b = o.b.empty() ? s.a : parse_rat(o.b);
  s.t1 = o.t1.empty() ? s.a : parse_rat(o.t1);
  s.margin = parse_rat(o.margin);
  return s;
}

Int parse_qmax(const std::string& text, const Int& fallback) {
  if (text.empty()) return fallback;
  Rat q = parse_rat(text);
  if (!is_integer(q) || q < 1) {
    throw Error(ErrorKind::kConfigError, "--qmax must be a positive integer");
  }
  return q.get_num();
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw Error(ErrorKind::kConfigError, "cannot open output file " + path);
  return file;
}

Int certified_coverage(const BadStrategy& alice) {
  Int best(0);
  for (const RoundCertificate& c : alice.certificates()) {
    if (c.verified && c.q_hi > best) best = c.q_hi;
  }
  return best;
}

int do_play(const Options& o) {
  Weights w = Weights::parse(o.weights);
  Steps st = parse_steps(o);
  AffineDiagonalMap f = parse_map(o, w.dim());
  Session session = Session::weighted(w, GameParams{st.a, st.b, st.t1});
  auto alice = make_bad_strategy(w, f, st.a, st.margin);
  auto bob = make_bob(o.bob, o.seed, f);
  TranscriptMeta meta;
  meta.seed = o.seed;
  meta.margin = st.margin;
  if (!f.is_identity()) {
    meta.f_diag = f.diag;
    meta.f_shift = f.shift;
  }
  Transcript t = play(*alice, *bob, session, o.rounds, meta);

  const BadParams& bp = *alice->params();
  Int qmax = certified_coverage(*alice);
  if (qmax > 0) {
    auto v = verify_box(t.outcome().axis(), w.r, bp.c_prime, qmax, f);
    if (v.has_value()) {
      std::cerr << "verification failed: witness q=" << int_str(v->q) << "\n";
      return kVerifyFailed;
    }
  }

  std::ofstream file;
  emit_transcript(open_sink(o.out, file), t);
  std::cerr << "played " << o.rounds << " rounds vs " << o.bob << " (seed " << o.seed
            << "); c'=" << rat_str(bp.c_prime) << ", verified through q<="
            << int_str(qmax) << "\n";
  return kOk;
}

int do_verify(const Options& o) {
  // A rational vector is a point query; anything else is a transcript path.
  bool is_point = !o.target.empty() &&
                  o.target.find_first_not_of("0123456789/,.- ") == std::string::npos;
  if (is_point) {
    if (o.weights.empty()) {
      throw Error(ErrorKind::kConfigError, "--weights is required for point queries");
    }
    Weights w = Weights::parse(o.weights);
    Vec x = parse_rat_list(o.target);
    if (x.size() != w.dim()) {
      throw Error(ErrorKind::kConfigError, "point dimension does not match weights");
    }
    Steps st = parse_steps(o);
    AffineDiagonalMap f = parse_map(o, w.dim());
    Rat cprime = o.cprime.empty()
                     ? derive_params(w, f, st.a, st.b, st.t1, st.margin).c_prime
                     : parse_rat(o.cprime);
    Int qmax = parse_qmax(o.qmax, ceil_pow2(Rat(16)));
    AxisBox box{x, x};
    auto v = verify_box(box, w.r, cprime, qmax, f);
    if (v.has_value()) {
      std::cout << "violation: q=" << int_str(v->q) << " p=(";
      for (std::size_t i = 0; i < v->p.size(); ++i) {
        std::cout << (i ? "," : "") << int_str(v->p[i]);
      }
      std::cout << ")\n";
      return kVerifyFailed;
    }
    std::cout << "ok: no rational with q<=" << int_str(qmax) << " comes within c'="
              << rat_str(cprime) << "\n";
    return kOk;
  }

  Transcript t = load_transcript(o.target);
  auto bad = validate_moves(t);
  if (bad.has_value()) {
    std::cerr << "illegal move at index " << *bad << "\n";
    return kIllegal;
  }
  Weights w(t.meta.weights);
  AffineDiagonalMap f = AffineDiagonalMap::identity(w.dim());
  if (!t.meta.f_diag.empty()) {
    f.diag = t.meta.f_diag;
    f.shift = t.meta.f_shift.empty() ? Vec(w.dim(), Rat(0)) : t.meta.f_shift;
  }
  Rat margin = t.meta.margin.value_or(Rat(1, 2));
  Rat cprime = o.cprime.empty()
                   ? derive_params(w, f, t.meta.params.a, t.meta.params.b,
                                   t.meta.params.t1, margin)
                         .c_prime
                   : parse_rat(o.cprime);
  Int coverage = ceil_pow2(Rat(t.meta.rounds - 1) * (t.meta.params.a + t.meta.params.b));
  Int qmax = parse_qmax(o.qmax, coverage);
  auto v = verify_box(t.outcome().axis(), w.r, cprime, qmax, f);
  if (v.has_value()) {
    std::cout << "violation: q=" << int_str(v->q) << "\n";
    return kVerifyFailed;
  }
  std::cout << "ok: " << t.moves.size() << " moves legal; outcome clear through q<="
            << int_str(qmax) << "\n";
  return kOk;
}

int do_tree(const Options& o) {
  Weights w = Weights::parse(o.weights);
  Steps st = parse_steps(o);
  Session session = Session::weighted(w, GameParams{st.a, st.b, st.t1});
  auto alice = make_bad_strategy(w, AffineDiagonalMap::identity(w.dim()), st.a, st.margin);
  TreeLevels tree = build_strategy_tree(*alice, session, o.depth);
  MeasureModel model = measure_model(w);
  TreeCheck rep = check_treelike(tree, model);
  if (!rep.ok()) {
    std::cerr << "tree structure violated\n";
    return kVerifyFailed;
  }
  double d_mu = static_cast<double>(w.dim());
  std::ofstream file;
  std::ostream& out = open_sink(o.out, file);
  out << "k,count,d_k,delta_k,estimate\n";
  double cum = 0.0;
  for (std::size_t k = 0; k < tree.levels.size(); ++k) {
    Rat delta = (k == 0) ? delta_root(tree) : delta_k(tree, static_cast<int>(k) - 1);
    cum += std::log2(to_double(delta));
    double est = d_mu + cum / -std::log2(to_double(rep.diameters[k]));
    out << k << "," << tree.levels[k].size() << "," << rat_str(rep.diameters[k]) << ","
        << rat_str(delta) << "," << est << "\n";
  }
  return kOk;
}

int do_intersect(const Options& o) {
  Weights w = Weights::parse(o.weights);
  Steps st = parse_steps(o);
  if (o.subsets.empty()) {
    throw Error(ErrorKind::kConfigError, "--subsets is required (e.g. \"1,2;1;2\")");
  }
  std::vector<SubsetSpec> specs;
  std::stringstream groups(o.subsets);
  std::string group;
  while (std::getline(groups, group, ';')) {
    SubsetSpec spec;
    for (const Rat& v : parse_rat_list(group)) {
      if (!is_integer(v) || v < 1 || v > Rat(static_cast<long>(w.dim()))) {
        throw Error(ErrorKind::kConfigError, "subset indices are 1-based coordinates");
      }
      spec.indices.push_back(static_cast<std::size_t>(v.get_num().get_ui()) - 1);
    }
    specs.push_back(std::move(spec));
  }

  IntersectionPlan plan = intersection_strategy(w, specs, st.a, st.margin);
  Session session = Session::weighted(w, GameParams{st.a, st.b, st.t1});
  auto bob = make_bob(o.bob, o.seed, AffineDiagonalMap::identity(w.dim()));
  Transcript t = play(*plan.strategy, *bob, session, o.rounds, {});
  const GameBox& outcome = t.outcome();

  std::ofstream file;
  std::ostream& out = open_sink(o.out, file);
  out << "component,weights,kappa,c_prime,qmax,verified\n";
  bool all_ok = true;
  int m = static_cast<int>(plan.components.size());
  for (int i = 0; i < m; ++i) {
    const ComponentInfo& info = plan.components[static_cast<std::size_t>(i)];
    const BadParams& bp = *info.core->params();
    Int qmax = coverage_qmax(*info.core, component_moves(i + 1, m, o.rounds));
    std::string verdict = "-";
    if (qmax > 0) {
      auto v = verify_box(outcome.axis(), info.verify_weights, bp.c_prime, qmax,
                          AffineDiagonalMap::identity(w.dim()));
      verdict = v.has_value() ? "no" : "yes";
      if (v.has_value()) all_ok = false;
    }
    out << info.label << ",(";
    for (std::size_t j = 0; j < bp.w.r.size(); ++j) {
      out << (j ? " " : "") << rat_str(bp.w.r[j]);
    }
    out << ")," << rat_str(info.kappa) << "," << rat_str(bp.c_prime) << ","
        << int_str(qmax) << "," << verdict << "\n";
  }
  return all_ok ? kOk : kVerifyFailed;
}

int do_ternary(const Options& o) {
  if (o.beta < 0) throw Error(ErrorKind::kConfigError, "--beta must be >= 0");
  SymReport rep = sym_play(o.seed, o.rounds, o.beta);
  std::ofstream file;
  std::ostream& out = open_sink(o.out, file);
  out << "opening: " << rep.opening.center.prefix()
      << (rep.opening.center.pinned() ? "" : "...") << " r=" << rat_str(rep.opening.radius)
      << "\n";
  for (std::size_t k = 0; k < rep.rounds.size(); ++k) {
    const SymRound& r = rep.rounds[k];
    out << "round " << (k + 1) << ": alice " << r.alice.center.prefix()
        << (r.alice.center.pinned() ? "" : "...") << " r=" << rat_str(r.alice.radius)
        << (r.singleton ? " [singleton]" : "") << " | bob r=" << rat_str(r.bob.radius)
        << "\n";
  }
  out << "outcome: " << rep.outcome.prefix()
      << (rep.outcome_has_zero ? " (absorbed)" : "") << "\n";
  return kOk;
}

int do_params(const Options& o) {
  Weights w = Weights::parse(o.weights);
  Steps st = parse_steps(o);
  AffineDiagonalMap f = parse_map(o, w.dim());
  Rat t1 = st.t1;
  std::optional<BadParams> bp;
  for (int tries = 0; tries < 64 && !bp.has_value(); ++tries) {
    try {
      bp = derive_params(w, f, st.a, st.b, t1, st.margin);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBadInitialTime) throw;
      t1 += st.a + st.b;  // the strategy would wait; derive for the later clock
    }
  }
  if (!bp.has_value()) {
    throw Error(ErrorKind::kConfigError, "no safe starting time below the search bound");
  }
  std::cout << "n:                 " << w.dim() << "\n";
  std::cout << "weights:           ";
  for (std::size_t i = 0; i < w.r.size(); ++i) {
    std::cout << (i ? "," : "") << rat_str(w.r[i]);
  }
  std::cout << "\n";
  std::cout << "lattice:           " << int_str(w.lattice()) << "\n";
  std::cout << "grid step:         " << rat_str(w.profile().grid_step()) << "\n";
  std::cout << "diameter exponent: " << rat_str(w.diameter_exponent()) << "\n";
  std::cout << "a, b:              " << rat_str(bp->a) << ", " << rat_str(bp->b) << "\n";
  std::cout << "t0 (least safe):   " << rat_str(bp->t0) << "\n";
  std::cout << "t1 (effective):    " << rat_str(bp->t1) << "\n";
  std::cout << "margin:            " << rat_str(bp->margin) << "\n";
  std::cout << "c':                " << rat_str(bp->c_prime) << " ("
            << to_double(bp->c_prime) << ")\n";
  return kOk;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"Exact engine for modified Schmidt games on badly approximable sets"};
  app.require_subcommand(1);
  Options o;

  CLI::App* play_cmd = app.add_subcommand("play", "Play a certified avoidance run");
  play_cmd->add_option("--weights", o.weights, "weight vector, e.g. 1/3,2/3")->required();
  play_cmd->add_option("--a", o.a, "responder step (rational)");
  play_cmd->add_option("--b", o.b, "chooser step (default: a)");
  play_cmd->add_option("--t1", o.t1, "opening time (default: a)");
  play_cmd->add_option("--rounds", o.rounds, "responder moves to play");
  play_cmd->add_option("--seed", o.seed, "chooser seed");
  play_cmd->add_option("--bob", o.bob, "center | seeded-random | rational-seeker");
  play_cmd->add_option("--f-diag", o.f_diag, "target map diagonal, e.g. 3/2,2");
  play_cmd->add_option("--f-shift", o.f_shift, "target map translation");
  play_cmd->add_option("--margin", o.margin, "safety margin in (0,1)");
  play_cmd->add_option("--out", o.out, "transcript path (default: stdout)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a point or a transcript against the oracle");
  verify_cmd->add_option("target", o.target, "rational point (e.g. 1/3) or transcript path")
      ->required();
  verify_cmd->add_option("--weights", o.weights, "weight vector (point queries)");
  verify_cmd->add_option("--a", o.a, "responder step for the derived constant");
  verify_cmd->add_option("--b", o.b, "chooser step (default: a)");
  verify_cmd->add_option("--t1", o.t1, "opening time (default: a)");
  verify_cmd->add_option("--margin", o.margin, "safety margin for the derived constant");
  verify_cmd->add_option("--cprime", o.cprime, "avoidance constant (default: derived)");
  verify_cmd->add_option("--qmax", o.qmax, "denominator bound (default: 2^16 or coverage)");
  verify_cmd->add_option("--f-diag", o.f_diag, "target map diagonal");
  verify_cmd->add_option("--f-shift", o.f_shift, "target map translation");

  CLI::App* tree_cmd = app.add_subcommand("tree", "Materialize a strategy tree as CSV");
  tree_cmd->add_option("--weights", o.weights, "weight vector")->required();
  tree_cmd->add_option("--a", o.a, "responder step");
  tree_cmd->add_option("--b", o.b, "chooser step (default: a)");
  tree_cmd->add_option("--t1", o.t1, "opening time (default: a)");
  tree_cmd->add_option("--margin", o.margin, "safety margin");
  tree_cmd->add_option("--depth", o.depth, "levels to materialize");
  tree_cmd->add_option("--out", o.out, "CSV path (default: stdout)");

  CLI::App* inter_cmd =
      app.add_subcommand("intersect", "Interleave avoidance strategies across subsets");
  inter_cmd->add_option("--weights", o.weights, "weight vector")->required();
  inter_cmd->add_option("--subsets", o.subsets, "1-based subsets, e.g. \"1,2;1;2\"")
      ->required();
  inter_cmd->add_option("--a", o.a, "responder step");
  inter_cmd->add_option("--b", o.b, "chooser step (default: a)");
  inter_cmd->add_option("--t1", o.t1, "opening time (default: a)");
  inter_cmd->add_option("--margin", o.margin, "safety margin");
  inter_cmd->add_option("--rounds", o.rounds, "outer rounds to play");
  inter_cmd->add_option("--seed", o.seed, "chooser seed");
  inter_cmd->add_option("--bob", o.bob, "chooser adversary");
  inter_cmd->add_option("--out", o.out, "report path (default: stdout)");

  CLI::App* tern_cmd =
      app.add_subcommand("ternary-demo", "Play the absorbing-digit sequence game");
  tern_cmd->add_option("--seed", o.seed, "opening seed");
  tern_cmd->add_option("--rounds", o.rounds, "rounds to play");
  tern_cmd->add_option("--beta", o.beta, "chooser shrink exponent (3^-beta)");
  tern_cmd->add_option("--out", o.out, "report path (default: stdout)");

  CLI::App* params_cmd =
      app.add_subcommand("params", "Print the derived constants of a configuration");
  params_cmd->add_option("--weights", o.weights, "weight vector")->required();
  params_cmd->add_option("--a", o.a, "responder step");
  params_cmd->add_option("--b", o.b, "chooser step (default: a)");
  params_cmd->add_option("--t1", o.t1, "opening time (default: a)");
  params_cmd->add_option("--margin", o.margin, "safety margin");
  params_cmd->add_option("--f-diag", o.f_diag, "target map diagonal");
  params_cmd->add_option("--f-shift", o.f_shift, "target map translation");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return kConfigBad;
  }

  try {
    if (play_cmd->parsed()) return do_play(o);
    if (verify_cmd->parsed()) return do_verify(o);
    if (tree_cmd->parsed()) return do_tree(o);
    if (inter_cmd->parsed()) return do_intersect(o);
    if (tern_cmd->parsed()) return do_ternary(o);
    if (params_cmd->parsed()) return do_params(o);
  } catch (const IllegalMoveError& e) {
    std::cerr << e.what() << "\n";
    return kIllegal;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kConfigBad;
  }
  return kConfigBad;
}

}  // namespace msgame
