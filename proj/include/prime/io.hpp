#pragma once

#include <string>
#include <vector>

#include "prime/taskgen.hpp"
#include "prime/trace.hpp"

namespace prime {

// All exchange formats are line-delimited JSON records.
//
// Instance file: one record per instance with fields task, category,
// difficulty, index, seed, input, answer, trace_digest, steps.
//
// Trace file: header record {header: task, seed, policy}, one record per
// event {step, kind, args, note?, state?}, footer record {final, counters}.

void write_instances(const std::string& path,
                     const std::vector<InstanceDescriptor>& instances);
std::vector<InstanceDescriptor> read_instances(const std::string& path);

std::string trace_to_text(const ExecutionTrace& trace);
ExecutionTrace read_trace_text(const std::string& text);
void write_trace(const std::string& path, const ExecutionTrace& trace);
ExecutionTrace read_trace(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// {placeholder} substitution for prompt templates; unknown placeholders are
// left intact.
std::string render_template(const std::string& template_text,
                            const std::vector<std::pair<std::string, std::string>>& values);

}  // namespace prime
