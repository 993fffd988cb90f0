#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dext {

enum class Verdict { Pass, Fail, Inconclusive, Unsupported };

std::string to_string(Verdict v);

struct Witness {
  std::string kind;    // e.g. "overlap", "relation", "degree"
  std::string detail;  // canonically rendered polynomial / word / index
};

/// Structured verdict emitted by every certifier. Witnesses and data are
/// canonical text so reports are byte-stable; timing stays out of the
/// serialized body.
struct CertReport {
  std::string check;
  Verdict verdict = Verdict::Pass;
  int bound = -1;  // -1 when not applicable
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  // key figures (e.g. "p12_prime" -> "-1"), in insertion order
  std::vector<std::pair<std::string, std::string>> data;
  double elapsed_ms = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }

  static CertReport pass(std::string check, int bound = -1);
  static CertReport fail(std::string check, Witness w, int bound = -1);

  CertReport& witness(std::string kind, std::string detail);
  CertReport& note(std::string text);
  CertReport& datum(std::string key, std::string value);
  /// Fold a sub-check into this aggregate: downgrade the verdict and copy
  /// witnesses, prefixing their kind with the sub-check name.
  CertReport& absorb(const CertReport& sub);

  std::string to_text() const;  // one human-readable line (plus witnesses)
};

}  // namespace dext
