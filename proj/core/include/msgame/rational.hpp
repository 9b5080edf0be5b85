// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_RATIONAL_HPP
#define MSGAME_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msgame {

// All correctness-relevant arithmetic in this library is exact.  Rat is an
// arbitrary-precision rational kept in canonical (lowest-terms) form; Int is
// an arbitrary-precision integer.
using Int = mpz_class;
using Rat = mpq_class;

enum class Ordering { kLess, kEqual, kGreater };

// Canonical textual forms: "p/q" in lowest terms, or "p" when q = 1.
std::string rat_str(const Rat& x);
std::string int_str(const Int& x);

// Parses "p", "p/q", or a decimal like "0.25" / "-1.5" into an exact
// rational.  Raises ParseError on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Parses a comma-separated list of rationals ("1/3,2/3").
std::vector<Rat> parse_rat_list(const std::string& text);

// 2^e for any integer e (negative exponents give exact dyadic fractions).
Rat pow2(const Int& e);
Rat pow2(long e);

// x^e for integer e >= 0.
Rat rat_pow(const Rat& x, unsigned long e);

// Compares lhs^le against rhs^re without leaving integer arithmetic.
// Preconditions: lhs, rhs >= 0 and le, re >= 1.
Ordering cmp_power(const Rat& lhs, unsigned long le, const Rat& rhs, unsigned long re);

// True iff x = p / 2^k for some integers p, k >= 0.
bool is_dyadic(const Rat& x);

bool is_integer(const Rat& x);

// Floor / ceiling to Int.
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// Smallest integer >= 2^e for rational e >= 0 (so always >= 1).
// Exact: for fractional e the result is computed via integer root extraction.
Int ceil_pow2(const Rat& e);

// lcm of the denominators of a list of rationals (canonical form assumed).
Int lcm_denominators(const std::vector<Rat>& xs);

// Least common multiple of positive rationals: the smallest positive rational
// that is an integer multiple of every input.
Rat rat_lcm(const std::vector<Rat>& xs);

// The unique rational with smallest denominator (ties: smallest |numerator|)
// in the closed interval [lo, hi]; Stern-Brocot descent.  Pre: lo <= hi.
Rat simplest_in_interval(const Rat& lo, const Rat& hi);

// Nearest integer to x with half-up tie breaking: floor(x + 1/2).
Int round_half_up(const Rat& x);

// If x is an exact power of two (x = 2^k, k possibly negative), returns k.
std::optional<long> exact_log2(const Rat& x);

double to_double(const Rat& x);

}  // namespace msgame

#endif  // MSGAME_RATIONAL_HPP
