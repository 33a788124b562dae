// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Text formats.
//
// Parameter file: comma-separated, '#' starts a comment line, optional header
//   parent,quarks,channel,branching,alpha,phi_pi,gamma_sign,source
// with branching as a fraction, signed alpha, phi in units of pi, gamma_sign
// '+' or '-', and a free-text source note (may contain commas). A note that
// starts with '*' marks a row whose phase was deduced rather than measured.
//
// Event file: header "event_id,role,channel,nx,ny,nz", one record per line,
// direction components with 9 significant digits.
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperon/decay.hpp"
#include "hyperon/events.hpp"

namespace hyperon {

struct ParameterRow {
  std::string parent;
  std::string quarks;
  std::string channel;
  double branching = 1.0;
  double alpha = 0.0;
  double phi_pi = 0.0;
  GammaSign gamma_sign = GammaSign::Plus;
  std::string source;
  std::size_t line = 0;

  bool deduced() const { return !source.empty() && source.front() == '*'; }
  DecayParameters params() const;
  DecayChannel channel_record() const;
};

struct ParameterTable {
  std::vector<ParameterRow> rows;
  std::vector<std::string> warnings;

  /// Row for `parent`; with an empty channel, the parent's largest branching.
  const ParameterRow* find(const std::string& parent, const std::string& channel = {}) const;
};

/// Throws ParseError (line, field) for malformed text and DataError naming
/// the line and field for rows that violate an invariant.
ParameterTable parse_parameters(std::istream& in);
ParameterTable load_parameters(const std::filesystem::path& path);

/// Recomputed interferometric quantities for one parameter row.
struct TableRow {
  std::string parent;
  std::string quarks;
  std::string channel;
  double branching;
  DecayParameters params;
  bool deduced;
};

std::vector<TableRow> reproduce_table(const ParameterTable& table);

inline constexpr const char* kTableHeader =
    "parent,quarks,channel,branching,alpha,beta,gamma,chi_sp_pi,visibility,predictability,"
    "deduced";

/// One CSV line per row, 6 significant digits; chi_sp_pi is the tabulated
/// (folded) phase in units of pi.
std::string emit_table(const ParameterTable& table);

/// Shortest round-trip text of `value` rounded to `digits` significant digits.
std::string format_significant(double value, int digits);
double round_significant(double value, int digits);

inline constexpr const char* kEventHeader = "event_id,role,channel,nx,ny,nz";
inline constexpr int kEventDigits = 9;

class EventWriter {
 public:
  /// Writes the header immediately.
  explicit EventWriter(std::ostream& out);
  void write(std::span<const EventRecord> records);

 private:
  std::ostream& out_;
};

void write_events(const std::filesystem::path& path, std::span<const EventRecord> records);

/// Streaming reader; next() returns nullopt at end of input. ParseError for
/// malformed lines names the line and the last good event id.
class EventReader {
 public:
  explicit EventReader(std::istream& in);
  std::optional<EventRecord> next();

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  std::optional<std::uint64_t> last_good_;
};

std::vector<EventRecord> read_events(std::istream& in);
std::vector<EventRecord> read_events(const std::filesystem::path& path);

}  // namespace hyperon
