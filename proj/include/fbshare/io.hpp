#ifndef FBSHARE_IO_HPP
#define FBSHARE_IO_HPP

#include <string>
#include <vector>

#include "fbshare/bank.hpp"
#include "fbshare/optimize.hpp"

namespace fbshare {

/// Parses a bank document. Two formats are accepted: JSON
/// {"filters": [[1,-1,...],...]} and plain text with one filter per line,
/// one '+' or '-' character per tap. The format is detected from the first
/// non-whitespace character.
FilterBank parse_bank(const std::string& text);

/// Canonical text form: one '+'/'-' line per filter, trailing newline.
std::string format_bank_text(const FilterBank& bank);

/// JSON form: {"filters": [[...], ...]}.
std::string format_bank_json(const FilterBank& bank);

/// Signal files hold one decimal integer per line.
std::vector<std::int64_t> parse_signal(const std::string& text);

std::string format_signal(const std::vector<std::int64_t>& samples);

/// CSV rows for a swept curve:
/// G,mode,inner_macs,outer_macs,outer_adds,total_macs,total_ops,feasible,ratio
std::string format_curve_csv(const OptResult& result);

std::string read_file(const std::string& path);

/// Writes via a temp file in the same directory plus rename, so readers
/// never observe partial content. Throws WriteFailure.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace fbshare

#endif
