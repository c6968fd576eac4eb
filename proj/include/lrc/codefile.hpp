// JSON formats for codes, line families and optimality certificates.

#ifndef LRC_CODEFILE_HPP
#define LRC_CODEFILE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/construct.hpp"
#include "lrc/geometry.hpp"

namespace lrc {

/// Malformed or inconsistent input file.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kCodeFileVersion = 1;

struct CodeFile {
  int format_version = kCodeFileVersion;
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k_claimed = 0;
  std::size_t r = 0;
  std::size_t delta = 0;
  std::vector<std::vector<Elem>> h;
  std::string provenance;

  LinearCode code() const;
};

CodeFile make_code_file(const LinearCode& code, std::size_t r, std::size_t delta,
                        std::string provenance);

/// Pretty-printed JSON followed by a newline.
std::string write_code_file(const CodeFile& file);
/// Throws FormatError on bad JSON, a wrong version, a bad field, shapes
/// inconsistent with n, or entries outside the field.
CodeFile read_code_file(const std::string& text);

std::string write_line_family(const LineFamily& family);
LineFamily read_line_family(const std::string& text);

/// Stage times are left out when `timing` is false.
std::string write_certificate(const Certificate& cert, bool timing);

}  // namespace lrc

#endif  // LRC_CODEFILE_HPP
