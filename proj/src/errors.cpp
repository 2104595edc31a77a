#include "flagcy/errors.hpp"

namespace flagcy
{

const char* to_string(ErrorCode code)
{
  switch (code)
  {
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidRank: return "InvalidRank";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::NotKahler: return "NotKahler";
  case ErrorCode::NotIntegral: return "NotIntegral";
  case ErrorCode::PicardRankOne: return "PicardRankOne";
  case ErrorCode::NotPrimitive: return "NotPrimitive";
  case ErrorCode::TrivialBundle: return "TrivialBundle";
  case ErrorCode::InvalidParameter: return "InvalidParameter";
  case ErrorCode::NotProportional: return "NotProportional";
  case ErrorCode::OddCount: return "OddCount";
  case ErrorCode::UnsupportedType: return "UnsupportedType";
  case ErrorCode::IllConditioned: return "IllConditioned";
  }
  return "Unknown";
}

int exit_code(ErrorCode code)
{
  switch (code)
  {
  case ErrorCode::ParseError:
  case ErrorCode::InvalidRank:
  case ErrorCode::IndexOutOfRange:
  case ErrorCode::DimensionMismatch:
    return 1;
  case ErrorCode::UnsupportedType:
    return 3;
  default:
    return 2;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(message), m_code(code), m_index(index)
{
}

} // namespace flagcy
