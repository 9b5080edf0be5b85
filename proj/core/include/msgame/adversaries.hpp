// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_ADVERSARIES_HPP
#define MSGAME_ADVERSARIES_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "msgame/game.hpp"

namespace msgame {

// Chooser strategies used as opponents, and simple responder strategies used
// as placeholders.  All randomness is counter-based: a draw depends only on
// (seed, stream, round, lane), never on call order.

// Keeps the current center; opening at the origin.
std::unique_ptr<Strategy> make_center_bob();

// Uniform dyadic center in the allowed-center box (32-bit lattice); seeded
// dyadic opening center in [-1/2, 1/2)^n.
std::unique_ptr<Strategy> make_seeded_bob(std::uint64_t seed);

// Chases rational targets: picks the simplest rational p/q whose image under
// f can still be centered on in coordinate 1, matches the remaining
// coordinates to p_i / q, and clamps f(p/q) into the allowed-center box.
// The opening is seeded like the random chooser.
std::unique_ptr<Strategy> make_seeker_bob(std::uint64_t seed, AffineDiagonalMap f);

// Factory by name: "center" | "seeded-random" | "rational-seeker".
std::unique_ptr<Strategy> make_bob(const std::string& name, std::uint64_t seed,
                                   const AffineDiagonalMap& f);

// Responder that always recenters (a legal strategy for any parameters).
std::unique_ptr<Strategy> make_centered_alice();

// Responder with a uniform dyadic center in the allowed-center box.
std::unique_ptr<Strategy> make_seeded_alice(std::uint64_t seed);

}  // namespace msgame

#endif  // MSGAME_ADVERSARIES_HPP
