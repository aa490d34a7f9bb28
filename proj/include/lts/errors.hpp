#pragma once

#include <stdexcept>
#include <string>

namespace lts {

/// A runtime certificate did not hold. `name()` identifies which one so
/// the CLI can report it verbatim.
class CertificateFailure : public std::runtime_error {
 public:
  CertificateFailure(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Two independent routes to the same answer disagreed.
class OracleDisagreement : public CertificateFailure {
 public:
  explicit OracleDisagreement(const std::string& detail) : CertificateFailure("OracleDisagreement", detail) {}
};

class NotWellDefined : public CertificateFailure {
 public:
  explicit NotWellDefined(const std::string& detail) : CertificateFailure("NotWellDefined", detail) {}
};

class LeibnizIdentityFailure : public CertificateFailure {
 public:
  explicit LeibnizIdentityFailure(const std::string& detail) : CertificateFailure("LeibnizIdentityFailure", detail) {}
};

class DecompositionFailure : public CertificateFailure {
 public:
  explicit DecompositionFailure(const std::string& detail) : CertificateFailure("DecompositionFailure", detail) {}
};

class EquivalenceFailure : public CertificateFailure {
 public:
  explicit EquivalenceFailure(const std::string& detail) : CertificateFailure("EquivalenceFailure", detail) {}
};

class IdealCertificateFailure : public CertificateFailure {
 public:
  explicit IdealCertificateFailure(const std::string& detail) : CertificateFailure("IdealCertificateFailure", detail) {}
};

/// Malformed input file. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lts
