#pragma once
// Canonical JSON form of a certificate: field order is fixed and all values
// are integers or fixed strings, so serialization is byte-deterministic.

#include <string>

#include "hcgap/builder.hpp"

namespace hcgap {

std::string certificate_to_json(const Certificate& cert, int indent = 2);

// Parses and size-validates a certificate document.  Throws
// std::invalid_argument on malformed input.
Certificate certificate_from_json(const std::string& text);

std::string label_to_json(const DomainLabel& label, Int n, Int d, Int g, int indent = 2);

}  // namespace hcgap
