// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "msgame/errors.hpp"

namespace msgame {

std::string rat_str(const Rat& x) {
  return x.get_str();
}

std::string int_str(const Int& x) {
  return x.get_str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::kParseError, "empty rational literal");

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw Error(ErrorKind::kParseError, "sign without digits: '" + text + "'");

  Rat value;
  std::size_t slash = body.find('/');
  std::size_t dot = body.find('.');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::kParseError, "malformed fraction: '" + text + "'");
    }
    Int d(den, 10);
    if (d == 0) throw Error(ErrorKind::kParseError, "zero denominator: '" + text + "'");
    value = Rat(Int(num, 10), d);
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp)) {
      throw Error(ErrorKind::kParseError, "malformed decimal: '" + text + "'");
    }
    Int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    value = Rat(Int(ip, 10) * scale + Int(fp, 10), scale);
  } else {
    if (!all_digits(body)) {
      throw Error(ErrorKind::kParseError, "malformed integer: '" + text + "'");
    }
    value = Rat(Int(body, 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_rat(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rat pow2(const Int& e) {
  if (!e.fits_slong_p()) {
    throw Error(ErrorKind::kConfigError, "power-of-two exponent out of range: " + int_str(e));
  }
  return pow2(e.get_si());
}

Rat pow2(long e) {
  Rat out(1);
  if (e >= 0) {
    mpz_ui_pow_ui(mpq_numref(out.get_mpq_t()), 2, static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(mpq_denref(out.get_mpq_t()), 2, static_cast<unsigned long>(-e));
  }
  return out;
}

Rat rat_pow(const Rat& x, unsigned long e) {
  Rat out(1);
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(x.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(x.get_mpq_t()), e);
  return out;  // lowest terms is preserved under powering
}

Ordering cmp_power(const Rat& lhs, unsigned long le, const Rat& rhs, unsigned long re) {
  if (lhs < 0 || rhs < 0) {
    throw Error(ErrorKind::kConfigError, "cmp_power requires non-negative bases");
  }
  if (le == 0 || re == 0) {
    throw Error(ErrorKind::kConfigError, "cmp_power requires positive exponents");
  }
  // lhs^le <=> rhs^re  ===  ln^le * rd^re <=> rn^re * ld^le, all factors >= 0.
  Int a, b, t;
  mpz_pow_ui(a.get_mpz_t(), mpq_numref(lhs.get_mpq_t()), le);
  mpz_pow_ui(t.get_mpz_t(), mpq_denref(rhs.get_mpq_t()), re);
  a *= t;
  mpz_pow_ui(b.get_mpz_t(), mpq_numref(rhs.get_mpq_t()), re);
  mpz_pow_ui(t.get_mpz_t(), mpq_denref(lhs.get_mpq_t()), le);
  b *= t;
  int c = cmp(a, b);
  if (c < 0) return Ordering::kLess;
  if (c > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

bool is_dyadic(const Rat& x) {
  return mpz_popcount(mpq_denref(x.get_mpq_t())) == 1;  // denominator is a power of two
}

bool is_integer(const Rat& x) {
  return x.get_den() == 1;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
  return q;
}

Int ceil_pow2(const Rat& e) {
  if (e <= 0) return Int(1);
  const Int num = e.get_num();
  const Int den = e.get_den();
  if (!num.fits_ulong_p() || !den.fits_ulong_p()) {
    throw Error(ErrorKind::kConfigError, "power-of-two exponent out of range: " + rat_str(e));
  }
  if (den == 1) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, num.get_ui());
    return out;
  }
  // Smallest N with N^den >= 2^num: integer root with exactness check.
  Int p2, root;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, num.get_ui());
  int exact = mpz_root(root.get_mpz_t(), p2.get_mpz_t(), den.get_ui());
  if (!exact) root += 1;
  return root;
}

Int lcm_denominators(const std::vector<Rat>& xs) {
  Int l(1);
  for (const Rat& x : xs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(x.get_mpq_t()));
  }
  return l;
}

Rat rat_lcm(const std::vector<Rat>& xs) {
  if (xs.empty()) throw Error(ErrorKind::kConfigError, "rat_lcm of empty list");
  // For reduced p_i/q_i the answer is lcm(p_i)/gcd(q_i).
  Int num(0), den(0);
  for (const Rat& x : xs) {
    if (x <= 0) throw Error(ErrorKind::kConfigError, "rat_lcm requires positive inputs");
    if (num == 0) {
      num = x.get_num();
      den = x.get_den();
    } else {
      mpz_lcm(num.get_mpz_t(), num.get_mpz_t(), mpq_numref(x.get_mpq_t()));
      mpz_gcd(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(x.get_mpq_t()));
    }
  }
  Rat out(num, den);
  out.canonicalize();
  return out;
}

namespace {

// 0 < lo <= hi: rational with smallest denominator in [lo, hi].
Rat simplest_positive(Rat lo, Rat hi) {
  // Iterative continued-fraction descent; reconstruct at the end.
  std::vector<Int> prefix;
  Rat result;
  for (;;) {
    Int fl = floor_rat(lo);
    if (lo == Rat(fl)) {
      result = Rat(fl);
      break;
    }
    if (hi >= Rat(fl) + 1) {
      result = Rat(fl) + 1;
      break;
    }
    prefix.push_back(fl);
    Rat nlo = 1 / (hi - Rat(fl));
    Rat nhi = 1 / (lo - Rat(fl));
    lo = nlo;
    hi = nhi;
  }
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    result = Rat(*it) + 1 / result;
  }
  return result;
}

}  // namespace

Rat simplest_in_interval(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw Error(ErrorKind::kConfigError, "simplest_in_interval: empty interval");
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (lo > 0) return simplest_positive(lo, hi);
  return -simplest_positive(-hi, -lo);
}

Int round_half_up(const Rat& x) {
  return floor_rat(x + Rat(1, 2));
}

std::optional<long> exact_log2(const Rat& x) {
  if (sgn(x) <= 0) return std::nullopt;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  if (mpz_popcount(num.get_mpz_t()) != 1 || mpz_popcount(den.get_mpz_t()) != 1)
    return std::nullopt;
  long up = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1;
  long down = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  return up - down;
}

double to_double(const Rat& x) {
  return x.get_d();
}

}  // namespace msgame
