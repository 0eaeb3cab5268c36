#pragma once

#include <stdexcept>
#include <string>

namespace arena {

/// A bid, label, or profile does not belong to the domain it was used with.
class DomainMismatchError : public std::runtime_error {
public:
    explicit DomainMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// The bid space exceeds the configured enumeration cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A scenario document is malformed (bad shape, unknown fields, invalid values).
class ScenarioFormatError : public std::runtime_error {
public:
    explicit ScenarioFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Stats store I/O failed.
class PersistenceError : public std::runtime_error {
public:
    explicit PersistenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A stored stats record exists but cannot be decoded. Distinct from absence.
class CorruptRecordError : public PersistenceError {
public:
    explicit CorruptRecordError(const std::string& what) : PersistenceError(what) {}
};

}  // namespace arena
