#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dext/dedata.hpp"

namespace dext {

/// Parsed session file: field declaration, base presentation, extension
/// data and run options. The blocks must appear in that order; scalar
/// literals are parsed as elements of the declared field.
struct SessionFile {
  Field field;

  struct Base {
    std::vector<std::pair<std::string, int>> generators;  // name, degree
    std::vector<NcPoly> relations;
    bool operator==(const Base&) const = default;
  } base;

  struct Extension {
    bool present = false;
    Scalar p12, p11;
    int dy1 = 1, dy2 = 1;
    std::vector<Mat2> sigma;  // one per generator
    std::vector<Col2> delta;  // one per generator
    NcPoly tau1, tau2, tau0;
    bool operator==(const Extension&) const = default;
  } ext;

  struct Options {
    int max_degree = 5;
    std::vector<std::string> checks;
    bool operator==(const Options&) const = default;
  } options;

  bool operator==(const SessionFile&) const = default;

  Alphabet base_alphabet() const;
  /// Oriented reduction system of the base block (validates homogeneity
  /// and orientation).
  ReductionSystem base_system() const;
  /// Full DE-data; requires the extension block.
  DEData to_dedata() const;
};

/// Recursive-descent parser; throws ParseError with line and column.
SessionFile parse_session(const std::string& text);

/// Canonical rendering; parse_session(render_session(s)) == s.
std::string render_session(const SessionFile& s);

/// Parses one polynomial expression over the given alphabet (used for CLI
/// --element arguments).
NcPoly parse_expression(const std::string& text, const Alphabet& alphabet,
                        const Field& field);

/// Renders a DEData instance as a session file (inverse of to_dedata up to
/// normal forms).
SessionFile session_from_dedata(const DEData& d, int max_degree = 5);

}  // namespace dext
