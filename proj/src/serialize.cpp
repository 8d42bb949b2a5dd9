#include "flowbch/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace flowbch {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

}  // namespace

OutputFormat format_from_name(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + name);
}

std::string element_to_plain(const AlgebraElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) out += ",";
    if (is_complex(x.algebra))
      out += fmt(x.coeffs[i].real()) + ":" + fmt(x.coeffs[i].imag());
    else
      out += fmt(x.coeffs[i].real());
  }
  return out;
}

std::string element_to_json(const AlgebraElement& x) {
  nlohmann::json j;
  j["algebra"] = algebra_tag(x.algebra);
  if (is_complex(x.algebra)) {
    auto arr = nlohmann::json::array();
    for (const auto& c : x.coeffs) arr.push_back({c.real(), c.imag()});
    j["coeffs"] = arr;
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& c : x.coeffs) arr.push_back(c.real());
    j["coeffs"] = arr;
  }
  return j.dump();
}

AlgebraElement element_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const AlgebraId id = algebra_from_tag(j.at("algebra").get<std::string>());
  std::vector<cdouble> coeffs;
  for (const auto& v : j.at("coeffs")) {
    if (v.is_array())
      coeffs.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    else
      coeffs.emplace_back(v.get<double>(), 0.0);
  }
  return AlgebraElement(id, std::move(coeffs));
}

std::string element_to_string(const AlgebraElement& x, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return element_to_json(x);
    case OutputFormat::plain:
    case OutputFormat::csv: return element_to_plain(x);
  }
  throw std::logic_error("unknown format");
}

AlgebraElement parse_element(AlgebraId id, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != basis_dim(id))
    throw std::invalid_argument("expected " + std::to_string(basis_dim(id)) + " coefficients");
  std::vector<cdouble> coeffs;
  for (const auto& part : parts) {
    const auto reim = split(part, ':');
    if (reim.size() == 1)
      coeffs.emplace_back(parse_double(reim[0]), 0.0);
    else if (reim.size() == 2 && is_complex(id))
      coeffs.emplace_back(parse_double(reim[0]), parse_double(reim[1]));
    else
      throw std::invalid_argument("bad coefficient: " + part);
  }
  return AlgebraElement(id, std::move(coeffs));
}

std::string state_to_string(const ContactState& x) {
  return fmt(x.q) + "," + fmt(x.p) + "," + fmt(x.s);
}

std::string state_to_string(const SymplecticState& x) { return fmt(x.q) + "," + fmt(x.p); }

ContactState parse_contact_state(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("expected q,p,s");
  return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
}

SymplecticState parse_symplectic_state(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw std::invalid_argument("expected q,p");
  return {parse_double(parts[0]), parse_double(parts[1])};
}

}  // namespace flowbch
