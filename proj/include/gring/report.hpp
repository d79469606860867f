#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gring {

/// Stable verdict taxonomy shared by every check.
/// `not_certified` marks a bounded search that found nothing, `undecided`
/// marks a method that does not apply to the input.
enum class Verdict { pass, fail, not_certified, undecided };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_certified: return "not-certified";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

/// One violated axiom. `witness` holds the indices (arrows, basis vectors,
/// objects) needed to replay the failing identity.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string axiom, std::vector<std::size_t> witness, std::string message = {}) {
    violations.push_back({std::move(axiom), std::move(witness), std::move(message)});
  }

  void append(const ValidationReport& other, std::string_view prefix = {}) {
    for (const auto& v : other.violations) {
      violations.push_back({std::string(prefix) + v.axiom, v.witness, v.message});
    }
  }

  bool has(std::string_view axiom) const {
    for (const auto& v : violations) {
      if (v.axiom == axiom) return true;
    }
    return false;
  }

  const Violation* find(std::string_view axiom) const {
    for (const auto& v : violations) {
      if (v.axiom == axiom) return &v;
    }
    return nullptr;
  }
};

}  // namespace gring
