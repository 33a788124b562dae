// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/dataio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace hyperon {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    fields.push_back(std::string(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::optional<double> to_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<std::uint64_t> to_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string to_text(double value, int digits) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general,
                                       digits);
  return std::string(buf, ptr);
}

[[noreturn]] void row_error(std::size_t line, const char* field, const std::string& what) {
  throw DataError("parameter line " + std::to_string(line) + ", field '" + field + "': " + what);
}

constexpr const char* kParameterFields[] = {"parent", "quarks",     "channel", "branching",
                                            "alpha",  "phi_pi",     "gamma_sign", "source"};

}  // namespace

DecayParameters ParameterRow::params() const {
  return params_from_alpha_phi(alpha, phi_pi * std::numbers::pi, gamma_sign);
}

DecayChannel ParameterRow::channel_record() const {
  DecayChannel c{parent, channel, 0.5, branching, params()};
  c.validate();
  return c;
}

const ParameterRow* ParameterTable::find(const std::string& parent,
                                         const std::string& channel) const {
  const ParameterRow* best = nullptr;
  for (const auto& row : rows) {
    if (row.parent != parent) continue;
    if (!channel.empty()) {
      if (row.channel == channel) return &row;
      continue;
    }
    if (best == nullptr || row.branching > best->branching) best = &row;
  }
  return best;
}

ParameterTable parse_parameters(std::istream& in) {
  ParameterTable table;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, ',');
    for (auto& f : fields) f = trim(f);
    if (!seen_content) {
      seen_content = true;
      if (!fields.empty() && fields.front() == "parent") continue;
    }
    constexpr std::size_t kFields = std::size(kParameterFields);
    if (fields.size() < kFields)
      throw ParseError("expected " + std::to_string(kFields) + " fields, found " +
                           std::to_string(fields.size()),
                       line_no, fields.size() + 1);
    // The source note is free text and may itself contain commas.
    std::size_t source_start = 0;
    for (std::size_t i = 0; i + 1 < kFields; ++i) source_start = line.find(',', source_start) + 1;
    fields[kFields - 1] = trim(std::string_view(line).substr(source_start));
    fields.resize(kFields);

    ParameterRow row;
    row.line = line_no;
    row.parent = fields[0];
    row.quarks = fields[1];
    row.channel = fields[2];
    row.source = fields[7];
    if (row.parent.empty()) throw ParseError("empty parent name", line_no, 1);
    if (row.channel.empty()) throw ParseError("empty channel", line_no, 3);
    const std::size_t numeric_columns[] = {3, 4, 5};
    double numbers[3];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto v = to_double(fields[numeric_columns[i]]);
      if (!v)
        throw ParseError("field '" + std::string(kParameterFields[numeric_columns[i]]) +
                             "' is not a number: '" + fields[numeric_columns[i]] + "'",
                         line_no, numeric_columns[i] + 1);
      numbers[i] = *v;
    }
    row.branching = numbers[0];
    row.alpha = numbers[1];
    row.phi_pi = numbers[2];
    if (fields[6] == "+" || fields[6] == "+1") {
      row.gamma_sign = GammaSign::Plus;
    } else if (fields[6] == "-" || fields[6] == "-1") {
      row.gamma_sign = GammaSign::Minus;
    } else {
      throw ParseError("gamma_sign must be '+' or '-': '" + fields[6] + "'", line_no, 7);
    }

    if (!(row.branching >= 0.0 && row.branching <= 1.0))
      row_error(line_no, "branching", "value " + fields[3] + " outside [0, 1]");
    if (!(std::abs(row.alpha) <= 1.0))
      row_error(line_no, "alpha", "|alpha| = " + fields[4] + " exceeds 1");
    try {
      row.params().validate();
    } catch (const DomainError& e) {
      row_error(line_no, "gamma_sign", e.what());
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) table.warnings.push_back("parameter file contains no rows");
  return table;
}

ParameterTable load_parameters(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open parameter file '" + path.string() + "'");
  try {
    return parse_parameters(in);
  } catch (const ParseError& e) {
    throw e.with_context(path.string() + ": ");
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::vector<TableRow> reproduce_table(const ParameterTable& table) {
  std::vector<TableRow> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows)
    out.push_back({row.parent, row.quarks, row.channel, row.branching, row.params(),
                   row.deduced()});
  return out;
}

double round_significant(double value, int digits) {
  const std::string text = to_text(value, digits);
  return *to_double(text);
}

std::string format_significant(double value, int digits) {
  const double rounded = round_significant(value, digits);
  if (rounded == 0.0) return "0";
  // Shortest representation that round-trips the rounded value.
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, rounded);
  return std::string(buf, ptr);
}

std::string emit_table(const ParameterTable& table) {
  std::ostringstream out;
  out << kTableHeader << '\n';
  for (const auto& r : reproduce_table(table)) {
    const auto f = [](double v) { return format_significant(v, 6); };
    out << r.parent << ',' << r.quarks << ',' << r.channel << ',' << f(r.branching) << ','
        << f(r.params.alpha) << ',' << f(r.params.beta) << ',' << f(r.params.gamma) << ','
        << f(r.params.tabulated_phase() / std::numbers::pi) << ',' << f(r.params.visibility)
        << ',' << f(r.params.predictability) << ',' << (r.deduced ? 1 : 0) << '\n';
  }
  return out.str();
}

EventWriter::EventWriter(std::ostream& out) : out_(out) { out_ << kEventHeader << '\n'; }

void EventWriter::write(std::span<const EventRecord> records) {
  std::string buffer;
  buffer.reserve(records.size() * 64);
  for (const auto& r : records) {
    if (r.channel.find_first_of(",\n\r") != std::string::npos)
      throw DataError("channel name '" + r.channel + "' contains a separator");
    buffer += std::to_string(r.event_id);
    buffer += ',';
    buffer += to_string(r.role);
    buffer += ',';
    buffer += r.channel;
    for (int i = 0; i < 3; ++i) {
      buffer += ',';
      buffer += to_text(r.n(i), kEventDigits);
    }
    buffer += '\n';
  }
  out_ << buffer;
  if (!out_) throw DataError("failed writing event records");
}

void write_events(const std::filesystem::path& path, std::span<const EventRecord> records) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open event file '" + path.string() + "' for writing");
  EventWriter writer(out);
  writer.write(records);
  out.flush();
  if (!out) throw DataError("failed writing event file '" + path.string() + "'");
}

EventReader::EventReader(std::istream& in) : in_(in) {
  std::string header;
  if (!std::getline(in_, header)) throw ParseError("event file is empty (missing header)", 1, 1);
  if (trim(header) != kEventHeader)
    throw ParseError("unexpected event file header '" + trim(header) + "'", 1, 1);
}

std::optional<EventRecord> EventReader::next() {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto fail = [&](const std::string& what, std::size_t column) -> ParseError {
      const std::string context = last_good_ ? "last good event_id " + std::to_string(*last_good_)
                                             : "no complete event before it";
      return ParseError("malformed event record: " + what + "; " + context, line_, column);
    };
    const auto fields = split(line, ',');
    if (fields.size() != 6)
      throw fail("expected 6 fields, found " + std::to_string(fields.size()), fields.size());
    EventRecord r;
    const auto id = to_u64(fields[0]);
    if (!id) throw fail("bad event_id '" + fields[0] + "'", 1);
    r.event_id = *id;
    const auto role = role_from_string(fields[1]);
    if (!role) throw fail("unknown role '" + fields[1] + "'", 2);
    r.role = *role;
    r.channel = fields[2];
    for (int i = 0; i < 3; ++i) {
      const auto v = to_double(fields[static_cast<std::size_t>(3 + i)]);
      if (!v) throw fail("bad direction component", static_cast<std::size_t>(4 + i));
      r.n(i) = *v;
    }
    if (std::abs(r.n.norm() - 1.0) > 1e-9) throw fail("direction is not a unit vector", 4);
    last_good_ = r.event_id;
    return r;
  }
  if (in_.bad()) throw DataError("I/O error while reading events");
  return std::nullopt;
}

std::vector<EventRecord> read_events(std::istream& in) {
  EventReader reader(in);
  std::vector<EventRecord> out;
  while (auto r = reader.next()) out.push_back(std::move(*r));
  return out;
}

std::vector<EventRecord> read_events(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open event file '" + path.string() + "'");
  try {
    return read_events(in);
  } catch (const ParseError& e) {
    throw e.with_context(path.string() + ": ");
  }
}

}  // namespace hyperon
