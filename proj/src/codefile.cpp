#include "lrc/codefile.hpp"

#include "json.hpp"
#include "json_text.hpp"

namespace lrc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json field_json(const Field& f) {
  return {{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("key \"") + key + "\" has the wrong type");
  }
}

FieldPtr read_field(const json& j) {
  if (!j.is_object()) throw FormatError("\"field\" must be an object");
  try {
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus")) modulus = get<std::vector<std::uint32_t>>(j, "modulus");
    return Field::build(get<std::uint32_t>(j, "p"), get<std::uint32_t>(j, "m"), modulus);
  } catch (const FieldError& e) {
    throw FormatError(std::string("bad field: ") + e.what());
  }
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

LinearCode CodeFile::code() const {
  Matrix m(field, h.size(), n);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h[i][j];
  return LinearCode(std::move(m));
}

CodeFile make_code_file(const LinearCode& code, std::size_t r, std::size_t delta,
                        std::string provenance) {
  CodeFile f;
  f.field = code.field_ptr();
  f.n = code.n();
  f.k_claimed = code.k();
  f.r = r;
  f.delta = delta;
  f.h = code.parity_check().to_rows();
  f.provenance = std::move(provenance);
  return f;
}

std::string write_code_file(const CodeFile& file) {
  ordered_json j;
  j["format_version"] = file.format_version;
  j["field"] = field_json(*file.field);
  j["n"] = file.n;
  j["k_claimed"] = file.k_claimed;
  j["r"] = file.r;
  j["delta"] = file.delta;
  j["H"] = file.h;
  j["provenance"] = file.provenance;
  return detail::json_text(j);
}

CodeFile read_code_file(const std::string& text) {
  const json j = parse(text);
  CodeFile f;
  f.format_version = get<int>(j, "format_version");
  if (f.format_version != kCodeFileVersion)
    throw FormatError("unsupported format_version " + std::to_string(f.format_version));
  f.field = read_field(j.contains("field") ? j.at("field") : json());
  f.n = get<std::size_t>(j, "n");
  f.k_claimed = get<std::size_t>(j, "k_claimed");
  f.r = get<std::size_t>(j, "r");
  f.delta = get<std::size_t>(j, "delta");
  f.h = get<std::vector<std::vector<Elem>>>(j, "H");
  if (j.contains("provenance")) f.provenance = get<std::string>(j, "provenance");
  for (std::size_t i = 0; i < f.h.size(); ++i) {
    if (f.h[i].size() != f.n)
      throw FormatError("row " + std::to_string(i) + " of H has " + std::to_string(f.h[i].size()) +
                        " entries, expected n = " + std::to_string(f.n));
    for (auto e : f.h[i])
      if (e >= f.field->q())
        throw FormatError("entry " + std::to_string(e) + " in row " + std::to_string(i) +
                          " is not an element of GF(" + std::to_string(f.field->q()) + ")");
  }
  return f;
}

std::string write_line_family(const LineFamily& family) {
  ordered_json j;
  j["field"] = field_json(family.field());
  ordered_json lines = ordered_json::array();
  for (const auto& l : family.lines()) lines.push_back(l.dual);
  j["lines"] = lines;
  return detail::json_text(j);
}

LineFamily read_line_family(const std::string& text) {
  const json j = parse(text);
  const FieldPtr field = read_field(j.contains("field") ? j.at("field") : json());
  const auto raw = get<std::vector<std::vector<Elem>>>(j, "lines");
  std::vector<ProjLine> lines;
  for (const auto& t : raw) {
    if (t.size() != 3) throw FormatError("each line needs three coordinates");
    const Triple tr{t[0], t[1], t[2]};
    for (auto x : tr)
      if (x >= field->q()) throw FormatError("line coordinate outside the field");
    if (tr == Triple{0, 0, 0}) throw FormatError("zero triple is not a line");
    if (normalize(*field, tr) != tr) throw FormatError("line triples must be normalized");
    lines.push_back({tr});
  }
  try {
    return LineFamily(field, std::move(lines));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string write_certificate(const Certificate& c, bool timing) {
  ordered_json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["d"] = c.d ? json(*c.d) : json(nullptr);
  j["r"] = c.r;
  j["delta"] = c.delta;
  j["ell"] = c.ell;
  j["u"] = c.u ? json(*c.u) : json(nullptr);
  j["u_expected"] = c.u_expected ? json(*c.u_expected) : json(nullptr);
  j["optimal"] = c.optimal;
  j["failed_stage"] = c.failed_stage ? json(*c.failed_stage) : json(nullptr);
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (c.strategy) j["distance_strategy"] = to_string(*c.strategy);
  if (timing) {
    ordered_json t = ordered_json::object();
    for (const auto& s : c.stage_times) t[s.stage] = s.ms;
    j["stage_times_ms"] = t;
  }
  return detail::json_text(j);
}

}  // namespace lrc
