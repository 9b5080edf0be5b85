// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_TRANSCRIPT_IO_HPP
#define MSGAME_TRANSCRIPT_IO_HPP

#include <iosfwd>
#include <string>

#include "msgame/game.hpp"

namespace msgame {

// Transcripts are stored as JSON Lines: a meta record first, then one record
// per move.  All rational values are canonical "p/q" strings, so emission is
// byte-deterministic and reading is exact.  Box sides are not stored; they
// are reconstructed from the session described by the meta record.

void emit_transcript(std::ostream& out, const Transcript& transcript);
void write_transcript(const std::string& path, const Transcript& transcript);
std::string transcript_string(const Transcript& transcript);

// Throws ParseError (with the offending line number) on malformed input.
Transcript read_transcript(std::istream& in);
Transcript load_transcript(const std::string& path);
Transcript parse_transcript(const std::string& text);

}  // namespace msgame

#endif  // MSGAME_TRANSCRIPT_IO_HPP
