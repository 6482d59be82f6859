// Serialization of result records. JSON lines is the canonical machine
// format (field names fixed, integers in decimal); CSV and Markdown carry the
// same data. JSON -> record -> JSON is the identity.
#pragma once

#include <string>
#include <vector>

#include "selink/classify.hpp"

namespace selink {

enum class OutputFormat { json, csv, md };

OutputFormat parse_format(const std::string& s);

std::string record_to_json(const ResultRecord& r);
ResultRecord record_from_json(const std::string& line);

std::string csv_header();
std::string record_to_csv(const ResultRecord& r);

std::string md_header();
std::string record_to_md(const ResultRecord& r);

// Full stream in the chosen format (JSON: one line per record; CSV/MD:
// header + rows).
std::string render_records(const std::vector<ResultRecord>& records, OutputFormat f);

}  // namespace selink
