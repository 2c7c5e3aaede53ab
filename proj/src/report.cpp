#include "qhg/report.hpp"

#include <algorithm>

namespace qhg {

void Report::add(std::string name, std::string anchor, bool passed, std::string witness) {
  checks_.push_back({std::move(name), std::move(anchor), passed, std::move(witness)});
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.passed; });
}

const CheckRecord* Report::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return !c.passed; });
  return it == checks_.end() ? nullptr : &*it;
}

const CheckRecord* Report::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckRecord& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool Report::passed(const std::string& name) const {
  const auto* c = find(name);
  return c != nullptr && c->passed;
}

ValidationError::ValidationError(CheckRecord record)
    : Error("validation failed at '" + record.name + "' (" + record.anchor + ")" +
            (record.witness.empty() ? std::string() : ": " + record.witness)),
      record_(std::move(record)) {}

void throw_if_failed(const Report& report) {
  if (const auto* f = report.first_failure()) throw ValidationError(*f);
}

}  // namespace qhg
