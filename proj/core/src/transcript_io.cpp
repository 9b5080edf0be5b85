// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/transcript_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "msgame/errors.hpp"

namespace msgame {

namespace {

using Json = nlohmann::ordered_json;

Json rat_list(const std::vector<Rat>& xs) {
  Json out = Json::array();
  for (const Rat& x : xs) out.push_back(rat_str(x));
  return out;
}

std::vector<Rat> parse_rat_array(const Json& node, const char* what) {
  if (!node.is_array()) {
    throw Error(ErrorKind::kParseError, std::string(what) + " must be an array");
  }
  std::vector<Rat> out;
  out.reserve(node.size());
  for (const auto& item : node) out.push_back(parse_rat(item.get<std::string>()));
  return out;
}

Rat rat_field(const Json& node, const char* key) {
  return parse_rat(node.at(key).get<std::string>());
}

Json meta_record(const TranscriptMeta& meta) {
  Json j;
  j["record"] = "meta";
  j["weights"] = rat_list(meta.weights);
  j["a"] = rat_str(meta.params.a);
  j["b"] = rat_str(meta.params.b);
  j["t1"] = rat_str(meta.params.t1);
  if (meta.params.a_star != 0) j["a_star"] = rat_str(meta.params.a_star);
  if (!meta.domain.empty()) j["domain"] = rat_list(meta.domain);
  j["rounds"] = meta.rounds;
  j["seed"] = meta.seed;
  j["alice"] = meta.alice;
  j["bob"] = meta.bob;
  if (!meta.f_diag.empty()) j["f_diag"] = rat_list(meta.f_diag);
  if (!meta.f_shift.empty()) j["f_shift"] = rat_list(meta.f_shift);
  if (meta.margin) j["margin"] = rat_str(*meta.margin);
  return j;
}

TranscriptMeta parse_meta(const Json& j) {
  TranscriptMeta meta;
  meta.weights = parse_rat_array(j.at("weights"), "weights");
  meta.params.a = rat_field(j, "a");
  meta.params.b = rat_field(j, "b");
  meta.params.t1 = rat_field(j, "t1");
  if (j.contains("a_star")) meta.params.a_star = rat_field(j, "a_star");
  if (j.contains("domain")) meta.domain = parse_rat_array(j.at("domain"), "domain");
  meta.rounds = j.at("rounds").get<int>();
  meta.seed = j.at("seed").get<std::uint64_t>();
  meta.alice = j.at("alice").get<std::string>();
  meta.bob = j.at("bob").get<std::string>();
  if (j.contains("f_diag")) meta.f_diag = parse_rat_array(j.at("f_diag"), "f_diag");
  if (j.contains("f_shift")) meta.f_shift = parse_rat_array(j.at("f_shift"), "f_shift");
  if (j.contains("margin")) meta.margin = rat_field(j, "margin");
  return meta;
}

Json move_record(const Move& move) {
  Json j;
  j["record"] = "move";
  j["round"] = move.round;
  j["player"] = player_name(move.player);
  j["t"] = rat_str(move.box.t);
  j["center"] = rat_list(move.box.center);
  const MoveNote& note = move.note;
  if (note.danger_count) j["danger_count"] = *note.danger_count;
  if (note.hyperplane) {
    Json h;
    h["normal"] = rat_list(note.hyperplane->normal);
    h["offset"] = rat_str(note.hyperplane->offset);
    j["hyperplane"] = h;
  }
  if (note.q_lo) j["q_lo"] = int_str(*note.q_lo);
  if (note.q_hi) j["q_hi"] = int_str(*note.q_hi);
  if (note.verified) j["verified"] = *note.verified;
  return j;
}

Move parse_move(const Json& j, const Session& session) {
  Move move;
  move.round = j.at("round").get<int>();
  move.player = player_from_name(j.at("player").get<std::string>());
  Rat t = rat_field(j, "t");
  Vec center = parse_rat_array(j.at("center"), "center");
  if (center.size() != session.dim()) {
    throw Error(ErrorKind::kParseError, "move center dimension mismatch");
  }
  move.box = session.box_at(center, t);
  if (j.contains("danger_count")) move.note.danger_count = j.at("danger_count").get<long>();
  if (j.contains("hyperplane")) {
    const Json& h = j.at("hyperplane");
    Hyperplane plane;
    plane.normal = parse_rat_array(h.at("normal"), "hyperplane normal");
    plane.offset = rat_field(h, "offset");
    move.note.hyperplane = std::move(plane);
  }
  if (j.contains("q_lo")) move.note.q_lo = Int(j.at("q_lo").get<std::string>());
  if (j.contains("q_hi")) move.note.q_hi = Int(j.at("q_hi").get<std::string>());
  if (j.contains("verified")) move.note.verified = j.at("verified").get<bool>();
  return move;
}

}  // namespace

void emit_transcript(std::ostream& out, const Transcript& transcript) {
  out << meta_record(transcript.meta).dump() << '\n';
  for (const Move& move : transcript.moves) {
    out << move_record(move).dump() << '\n';
  }
}

void write_transcript(const std::string& path, const Transcript& transcript) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kConfigError, "cannot open for writing: " + path);
  emit_transcript(out, transcript);
}

std::string transcript_string(const Transcript& transcript) {
  std::ostringstream out;
  emit_transcript(out, transcript);
  return out.str();
}

Transcript read_transcript(std::istream& in) {
  Transcript transcript;
  std::optional<Session> session;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      std::string kind = j.at("record").get<std::string>();
      if (kind == "meta") {
        if (session) {
          throw Error(ErrorKind::kParseError, "duplicate meta record");
        }
        transcript.meta = parse_meta(j);
        session = session_from_meta(transcript.meta);
      } else if (kind == "move") {
        if (!session) {
          throw Error(ErrorKind::kParseError, "move record before meta record");
        }
        transcript.moves.push_back(parse_move(j, *session));
      } else {
        throw Error(ErrorKind::kParseError, "unknown record kind: '" + kind + "'");
      }
    } catch (const std::exception& e) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!session) {
    throw Error(ErrorKind::kParseError, "transcript has no meta record");
  }
  return transcript;
}

Transcript load_transcript(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kConfigError, "cannot open for reading: " + path);
  return read_transcript(in);
}

Transcript parse_transcript(const std::string& text) {
  std::istringstream in(text);
  return read_transcript(in);
}

}  // namespace msgame
