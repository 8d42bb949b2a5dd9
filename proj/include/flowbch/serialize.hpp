#ifndef FLOWBCH_SERIALIZE_HPP
#define FLOWBCH_SERIALIZE_HPP

#include <string>

#include "flowbch/algebra.hpp"
#include "flowbch/flows.hpp"

namespace flowbch {

enum class OutputFormat { plain, json, csv };

OutputFormat format_from_name(const std::string& name);

/// Plain form: comma-separated coefficients, 17 significant digits; su2c
/// entries as re:im pairs.
std::string element_to_plain(const AlgebraElement& x);

/// Flat record {"algebra": tag, "coeffs": [...]} with [re, im] pairs for
/// su2c. Doubles round-trip exactly.
std::string element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const std::string& text);

std::string element_to_string(const AlgebraElement& x, OutputFormat format);

/// Comma-separated coefficient list in basis order; su2c accepts re:im.
AlgebraElement parse_element(AlgebraId id, const std::string& text);

std::string state_to_string(const ContactState& x);
std::string state_to_string(const SymplecticState& x);
ContactState parse_contact_state(const std::string& text);
SymplecticState parse_symplectic_state(const std::string& text);

}  // namespace flowbch

#endif
