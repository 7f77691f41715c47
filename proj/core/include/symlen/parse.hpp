#pragma once

#include <string_view>

#include "symlen/field.hpp"
#include "symlen/quadform.hpp"
#include "symlen/symbol.hpp"

namespace symlen {

/// "GF(p)", "GF(q)" with the default modulus, "GF(p^n)", "GF(p^n; m(z))",
/// each optionally followed by "(t)" or "((t))". The variable may be any
/// identifier other than the generator name z.
FieldPtr parse_field(std::string_view text);

/// Polynomials and fractions in z and the field variable: integers, + - * /,
/// ^ with an integer exponent (negative for nonzero bases), parentheses, and
/// implicit multiplication such as "2t" or "(z+1)t^2".
FieldElement parse_element(const FieldPtr& field, std::string_view text);

/// "[a,b)*[c,d)*...", or "1" for the empty product.
TensorProduct parse_product(const FieldPtr& field, std::string_view text);

/// "[a,b]+[c,d]+<e,f>", or "0" for the zero form. Blocks [a,b] come first in
/// the result, diagonal entries after them in order of appearance.
QuadraticForm parse_form(const FieldPtr& field, std::string_view text);

}  // namespace symlen
