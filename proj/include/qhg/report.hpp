#pragma once

#include <string>
#include <vector>

#include "qhg/errors.hpp"

namespace qhg {

/// Outcome of one named identity check. `anchor` is the identity in
/// mathematical notation; each check name always carries the same anchor.
struct CheckRecord {
  std::string name;
  std::string anchor;
  bool passed = true;
  std::string witness;
};

class Report {
 public:
  void add(std::string name, std::string anchor, bool passed, std::string witness = {});
  void append(const Report& other);

  bool ok() const;
  const CheckRecord* first_failure() const;
  const CheckRecord* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  const std::vector<CheckRecord>& checks() const { return checks_; }

 private:
  std::vector<CheckRecord> checks_;
};

/// A construction or derivation step failed; carries the first violated check.
class ValidationError : public Error {
 public:
  explicit ValidationError(CheckRecord record);
  const CheckRecord& record() const { return record_; }

 private:
  CheckRecord record_;
};

/// Throws ValidationError for the first failing record, if any.
void throw_if_failed(const Report& report);

}  // namespace qhg
