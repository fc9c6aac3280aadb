#include "prime/trace.hpp"

#include <charconv>
#include <stdexcept>

namespace prime {

namespace {
void append_i64(std::string& out, std::int64_t v) {
  char buf[24];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, p);
}
}  // namespace

std::string TraceEvent::canonical() const {
  // step|kind|a,b,c|note  -- note may be empty but the field separators
  // are always present, so the encoding is unambiguous.
  std::string out;
  out.reserve(24 + kind.size() + 8 * args.size() + note.size());
  append_i64(out, static_cast<std::int64_t>(step));
  out.push_back('|');
  out += kind;
  out.push_back('|');
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i != 0) out.push_back(',');
    append_i64(out, args[i]);
  }
  out.push_back('|');
  out += note;
  out.push_back('\n');
  return out;
}

TraceEvent parse_event_canonical(const std::string& line) {
  TraceEvent ev;
  std::string_view sv(line);
  if (!sv.empty() && sv.back() == '\n') sv.remove_suffix(1);
  auto next_field = [&sv](bool last) -> std::string_view {
    if (last) {
      std::string_view f = sv;
      sv = {};
      return f;
    }
    auto pos = sv.find('|');
    if (pos == std::string_view::npos) {
      throw std::invalid_argument("trace event: missing field separator");
    }
    std::string_view f = sv.substr(0, pos);
    sv.remove_prefix(pos + 1);
    return f;
  };
  auto parse_i64 = [](std::string_view f) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc() || p != f.data() + f.size()) {
      throw std::invalid_argument("trace event: bad integer");
    }
    return v;
  };

  ev.step = static_cast<std::uint64_t>(parse_i64(next_field(false)));
  ev.kind = std::string(next_field(false));
  if (ev.kind.empty()) throw std::invalid_argument("trace event: empty kind");
  std::string_view args = next_field(false);
  while (!args.empty()) {
    auto pos = args.find(',');
    std::string_view one = args.substr(0, pos);
    ev.args.push_back(parse_i64(one));
    if (pos == std::string_view::npos) break;
    args.remove_prefix(pos + 1);
  }
  ev.note = std::string(next_field(true));
  return ev;
}

std::string ExecutionTrace::digest() const {
  Sha256 hash;
  for (const auto& ev : events) hash.update(ev.canonical());
  hash.update("final:");
  hash.update(final_state);
  return hash.hex_digest();
}

}  // namespace prime
