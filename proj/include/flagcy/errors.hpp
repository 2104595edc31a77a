#ifndef FLAGCY_ERRORS_HPP
#define FLAGCY_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace flagcy
{

enum class ErrorCode
{
  ParseError,
  InvalidRank,
  DimensionMismatch,
  IndexOutOfRange,
  NotKahler,
  NotIntegral,
  PicardRankOne,
  NotPrimitive,
  TrivialBundle,
  InvalidParameter,
  NotProportional,
  OddCount,
  UnsupportedType,
  IllConditioned,
};

const char* to_string(ErrorCode code);

/// Exit status the CLI reports for an error of this kind.
int exit_code(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const { return m_code; }

  /// 1-based position of the offending item (bundle list entries), if any.
  std::optional<std::size_t> index() const { return m_index; }

private:
  ErrorCode m_code;
  std::optional<std::size_t> m_index;
};

} // namespace flagcy

#endif
