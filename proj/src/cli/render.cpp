#include "flagcy/cli.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace flagcy::cli
{

namespace
{

std::string render_float(double v)
{
  if (!std::isfinite(v))
    return "null";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  if (s.find('.') == std::string::npos)
  {
    const auto e = s.find('e');
    if (e == std::string::npos)
      s += ".0";
    else
      s.insert(e, ".0");
  }
  return s;
}

void write(std::ostringstream& os, const nlohmann::json& v, int depth)
{
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (v.type())
  {
  case nlohmann::json::value_t::object:
  {
    if (v.empty())
    {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it)
    {
      if (!first)
        os << ",\n";
      first = false;
      os << pad << nlohmann::json(it.key()).dump() << ": ";
      write(os, it.value(), depth + 1);
    }
    os << "\n" << close_pad << "}";
    return;
  }
  case nlohmann::json::value_t::array:
  {
    if (v.empty())
    {
      os << "[]";
      return;
    }
    os << "[\n";
    bool first = true;
    for (const auto& item : v)
    {
      if (!first)
        os << ",\n";
      first = false;
      os << pad;
      write(os, item, depth + 1);
    }
    os << "\n" << close_pad << "]";
    return;
  }
  case nlohmann::json::value_t::number_float:
    os << render_float(v.get<double>());
    return;
  default:
    os << v.dump();
    return;
  }
}

std::string scalar_text(const nlohmann::json& v)
{
  if (v.is_string())
    return v.get<std::string>();
  std::ostringstream os;
  write(os, v, 0);
  return os.str();
}

void write_text(std::ostringstream& os, const nlohmann::json& v, const std::string& indent)
{
  if (v.is_object())
  {
    for (auto it = v.begin(); it != v.end(); ++it)
    {
      const auto& val = it.value();
      if (val.is_structured() && !val.empty())
      {
        os << indent << it.key() << ":\n";
        write_text(os, val, indent + "  ");
      }
      else
        os << indent << it.key() << ": " << scalar_text(val)
           << "\n";
    }
  }
  else if (v.is_array())
  {
    for (std::size_t i = 0; i < v.size(); ++i)
    {
      const auto& val = v[i];
      if (val.is_structured() && !val.empty())
      {
        os << indent << "- [" << i + 1 << "]\n";
        write_text(os, val, indent + "  ");
      }
      else
        os << indent << "- " << scalar_text(val)
           << "\n";
    }
  }
  else
    os << indent << scalar_text(v) << "\n";
}

} // namespace

std::string render_json(const nlohmann::json& value)
{
  std::ostringstream os;
  write(os, value, 0);
  os << "\n";
  return os.str();
}

std::string render_text(const nlohmann::json& report)
{
  std::ostringstream os;
  os << "flagcy " << report.value("command", std::string()) << "\n";
  const auto& status = report.at("status");
  if (status.value("ok", false))
    os << "status: ok\n";
  else
    os << "status: error " << status.value("error", std::string()) << " (exit "
       << status.value("exit_code", 0) << "): " << status.value("message", std::string()) << "\n";
  if (report.contains("inputs"))
  {
    os << "inputs:\n";
    write_text(os, report.at("inputs"), "  ");
  }
  if (report.contains("results") && !report.at("results").is_null())
  {
    os << "results:\n";
    write_text(os, report.at("results"), "  ");
  }
  return os.str();
}

} // namespace flagcy::cli
