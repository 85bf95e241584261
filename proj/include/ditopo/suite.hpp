#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ditopo/io.hpp"

namespace ditopo {

// Shipped example documents, keyed by file name.
const std::map<std::string, std::string>& embedded_files();

struct SuiteRow {
  std::string id;
  std::vector<std::string> tags;
  std::string description;
  std::string expected, computed;
  bool pass = false;
};

struct SuiteOptions {
  // Keep only rows whose id starts with this prefix or that carry this tag.
  std::optional<std::string> only;
  // Documents the suite reads; defaults to the embedded table.
  std::map<std::string, std::string> files = embedded_files();
};

std::vector<std::string> suite_tags();
std::vector<SuiteRow> run_paper_suite(const SuiteOptions& opt = {});
Json suite_json(const std::vector<SuiteRow>& rows);
std::string suite_table(const std::vector<SuiteRow>& rows);
bool suite_passed(const std::vector<SuiteRow>& rows);

// Documents generated from the presets and example builders, keyed by the
// file name under which they ship. Hand-written documents are not included.
std::map<std::string, Json> generated_documents();
// Pushout of Z (grid size n) along the collapse with merge interval
// [a/n, b/n], watching the pair p0_a, p1_b.
Json z_pushout_document(long n, long a, long b);

// Replaces the named document with a truncated copy of itself.
void corrupt_file(std::map<std::string, std::string>& files, const std::string& name);

}  // namespace ditopo
