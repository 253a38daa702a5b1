#pragma once

#include <string>

#include "cohom/forms.hpp"
#include "cohom/tensor.hpp"

namespace cohom {

/// Canonical tensor schema (decimal-serialized doubles, bit-exact on
/// round-trip):
///   {"factors":[{"series":"first_principal","mu":0.25,"epsilon":0}, ...],
///    "window":[[lo,hi],...],
///    "coeffs":[[re,im],...]}        // row-major over the window
/// Discrete factors carry "n".
std::string tensor_to_json(const CoeffTensor& f);
CoeffTensor tensor_from_json(const std::string& text);

/// Form schema: {"degree":n, "components":{"1,3":<tensor object>, ...}};
/// the key is the comma-joined ascending multi-index ("" for degree 0).
std::string form_to_json(const DifferentialForm& w);
DifferentialForm form_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cohom
