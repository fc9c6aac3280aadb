#include "prime/io.hpp"

#include <fstream>
#include <sstream>

namespace prime {

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_instances(const std::string& path,
                     const std::vector<InstanceDescriptor>& instances) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& inst : instances) {
    out << inst.to_json().dump() << "\n";
  }
}

std::vector<InstanceDescriptor> read_instances(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<InstanceDescriptor> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(InstanceDescriptor::from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": bad instance record: " + e.what());
    }
  }
  return out;
}

std::string trace_to_text(const ExecutionTrace& trace) {
  std::ostringstream out;
  json header;
  header["header"] = json{{"task", trace.task_name},
                          {"seed", trace.seed},
                          {"policy", trace.policy.name()}};
  out << header.dump() << "\n";
  for (const auto& ev : trace.events) {
    json rec;
    rec["step"] = ev.step;
    rec["kind"] = ev.kind;
    rec["args"] = ev.args;
    if (!ev.note.empty()) rec["note"] = ev.note;
    if (!ev.state.empty()) rec["state"] = ev.state;
    out << rec.dump() << "\n";
  }
  json footer;
  footer["final"] = trace.final_state;
  json counters = json::object();
  for (const auto& [kind, count] : trace.counters) counters[kind] = count;
  footer["counters"] = counters;
  out << footer.dump() << "\n";
  return out.str();
}

ExecutionTrace read_trace_text(const std::string& text) {
  std::istringstream in(text);
  ExecutionTrace trace;
  std::string line;
  bool header_seen = false, footer_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json rec = json::parse(line);
    if (rec.contains("header")) {
      const auto& h = rec.at("header");
      trace.task_name = h.at("task").get<std::string>();
      trace.seed = h.at("seed").get<std::uint64_t>();
      trace.policy.full_every_event = h.at("policy").get<std::string>() == "full";
      header_seen = true;
    } else if (rec.contains("final")) {
      trace.final_state = rec.at("final").get<std::string>();
      for (const auto& [kind, count] : rec.at("counters").items()) {
        trace.counters[kind] = count.get<std::uint64_t>();
      }
      footer_seen = true;
    } else {
      TraceEvent ev;
      ev.step = rec.at("step").get<std::uint64_t>();
      ev.kind = rec.at("kind").get<std::string>();
      for (const auto& a : rec.at("args")) ev.args.push_back(a.get<std::int64_t>());
      if (rec.contains("note")) ev.note = rec.at("note").get<std::string>();
      if (rec.contains("state")) ev.state = rec.at("state").get<std::string>();
      trace.events.push_back(std::move(ev));
    }
  }
  if (!header_seen || !footer_seen) {
    throw std::runtime_error("trace text: missing header or footer record");
  }
  return trace;
}

void write_trace(const std::string& path, const ExecutionTrace& trace) {
  write_text_file(path, trace_to_text(trace));
}

ExecutionTrace read_trace(const std::string& path) {
  return read_trace_text(read_text_file(path));
}

std::string render_template(const std::string& template_text,
                            const std::vector<std::pair<std::string, std::string>>& values) {
  std::string out = template_text;
  for (const auto& [key, value] : values) {
    const std::string needle = "{" + key + "}";
    std::size_t pos = 0;
    while ((pos = out.find(needle, pos)) != std::string::npos) {
      out.replace(pos, needle.size(), value);
      pos += value.size();
    }
  }
  return out;
}

}  // namespace prime
