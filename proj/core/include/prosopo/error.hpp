#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prosopo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed record in an input file. what() reads "file:line: message".
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class DuplicateKeyError : public Error {
 public:
  using Error::Error;
};

class AmbiguousAliasError : public Error {
 public:
  using Error::Error;
};

class SnapshotError : public Error {
 public:
  using Error::Error;
};

class SnapshotVersionError : public SnapshotError {
 public:
  SnapshotVersionError(std::string found, std::string expected)
      : SnapshotError("snapshot version mismatch: file is " + found + ", reader expects " +
                      expected),
        found_(std::move(found)),
        expected_(std::move(expected)) {}

  const std::string& found() const noexcept { return found_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string found_;
  std::string expected_;
};

/// An editor ran more than one journal in the queried year.
class AmbiguousTenureError : public Error {
 public:
  explicit AmbiguousTenureError(std::vector<std::string> journals);
  const std::vector<std::string>& journals() const noexcept { return journals_; }

 private:
  std::vector<std::string> journals_;
};

/// A person, author or cluster key that the corpus does not know.
/// suggestions() holds alias or person keys that start with the query.
class UnknownKeyError : public Error {
 public:
  UnknownKeyError(const std::string& key, std::vector<std::string> suggestions = {});
  const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

 private:
  std::vector<std::string> suggestions_;
};

class NoDataError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace prosopo
