#ifndef COURANT_CHECK_REPORT_HPP
#define COURANT_CHECK_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "courant/tensor.hpp"

namespace courant {

/// First counterexample of a failed check: the basis index tuple it occurred
/// at and the nonzero defect vector.
struct Witness {
  std::vector<std::size_t> indices;
  Vec defect;
};

struct CheckEntry {
  std::string id;
  bool pass = false;
  std::optional<Witness> witness;  ///< present (and nonzero) iff !pass
};

/// Per-axiom verdicts of a checker. Checkers quantify each identity over all
/// basis tuples and record the lexicographically first failure. `notes` carry
/// auxiliary verdicts of composite checks (e.g. the two sides of a theorem
/// whose agreement is the actual pass condition).
struct CheckReport {
  std::vector<CheckEntry> entries;
  std::vector<std::pair<std::string, std::string>> notes;

  bool passed() const {
    for (const CheckEntry& e : entries)
      if (!e.pass) return false;
    return true;
  }

  const CheckEntry* find(const std::string& id) const {
    for (const CheckEntry& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  void add_pass(std::string id) {
    entries.push_back({std::move(id), true, std::nullopt});
  }

  void add_fail(std::string id, Witness w) {
    entries.push_back({std::move(id), false, std::move(w)});
  }

  void add(std::string id, bool pass, Witness w) {
    if (pass)
      add_pass(std::move(id));
    else
      add_fail(std::move(id), std::move(w));
  }

  void note(std::string key, std::string value) {
    notes.emplace_back(std::move(key), std::move(value));
  }
};

} // namespace courant

#endif
