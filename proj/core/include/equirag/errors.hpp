#pragma once

#include <stdexcept>
#include <string>

namespace equirag {

/// Base class for all harness errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- corpus --------------------------------------------------------------
class DuplicateDocIdError : public Error {
 public:
  using Error::Error;
};
class ChunkConfigMismatchError : public Error {
 public:
  using Error::Error;
};

// -- retrieval -----------------------------------------------------------
class EmptyStoreError : public Error {
 public:
  using Error::Error;
};
class EmbeddingDimMismatchError : public Error {
 public:
  using Error::Error;
};
class ProviderUnavailableError : public Error {
 public:
  using Error::Error;
};

// -- prompts -------------------------------------------------------------
class MissingSnippetError : public Error {
 public:
  using Error::Error;
};

// -- generation ----------------------------------------------------------
class AuthFailureError : public Error {
 public:
  using Error::Error;
};
class TimeoutError : public Error {
 public:
  using Error::Error;
};
class RateLimitedError : public Error {
 public:
  using Error::Error;
};
class MalformedResponseError : public Error {
 public:
  using Error::Error;
};
class TransportError : public Error {
 public:
  using Error::Error;
};

// -- aggregation ---------------------------------------------------------
class NoParseableAnswersError : public Error {
 public:
  using Error::Error;
};

// -- metrics -------------------------------------------------------------
class EmptyRecordSetError : public Error {
 public:
  using Error::Error;
};
class NoGroupsError : public Error {
 public:
  using Error::Error;
};
class NoAnswerableRecordsError : public Error {
 public:
  using Error::Error;
};

// -- harness -------------------------------------------------------------
class SchemaViolationError : public Error {
 public:
  SchemaViolationError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};
class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};
class ConfigError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};
class FailureBudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace equirag
