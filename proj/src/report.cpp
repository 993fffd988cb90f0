#include "dext/report.hpp"

namespace dext {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive-at-bound";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

CertReport CertReport::pass(std::string check, int bound) {
  CertReport r;
  r.check = std::move(check);
  r.bound = bound;
  return r;
}

CertReport CertReport::fail(std::string check, Witness w, int bound) {
  CertReport r;
  r.check = std::move(check);
  r.verdict = Verdict::Fail;
  r.bound = bound;
  r.witnesses.push_back(std::move(w));
  return r;
}

CertReport& CertReport::witness(std::string kind, std::string detail) {
  witnesses.push_back({std::move(kind), std::move(detail)});
  return *this;
}

CertReport& CertReport::note(std::string text) {
  notes.push_back(std::move(text));
  return *this;
}

CertReport& CertReport::datum(std::string key, std::string value) {
  data.emplace_back(std::move(key), std::move(value));
  return *this;
}

CertReport& CertReport::absorb(const CertReport& sub) {
  if (sub.verdict == Verdict::Fail) {
    verdict = Verdict::Fail;
  } else if (sub.verdict != Verdict::Pass && verdict == Verdict::Pass) {
    verdict = sub.verdict;
  }
  for (const auto& w : sub.witnesses)
    witnesses.push_back({sub.check + ":" + w.kind, w.detail});
  for (const auto& n : sub.notes) notes.push_back(sub.check + ": " + n);
  return *this;
}

std::string CertReport::to_text() const {
  std::string s = "[" + to_string(verdict) + "] " + check;
  if (bound >= 0) s += " (bound " + std::to_string(bound) + ")";
  for (const auto& [k, v] : data) s += "\n    " + k + " = " + v;
  for (const auto& w : witnesses) s += "\n    witness " + w.kind + ": " + w.detail;
  for (const auto& n : notes) s += "\n    note: " + n;
  return s;
}

}  // namespace dext
