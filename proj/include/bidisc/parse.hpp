#ifndef BIDISC_PARSE_HPP
#define BIDISC_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bidisc/form.hpp"

namespace bidisc {

// Grammar (monomials must be explicitly multiplied):
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" nat)?
//   base     := rational | "x" | "y" | "Y0" | "Y1" | "(" expr ")"
//   rational := ["-"] nat ("/" nat)?
BPoly parse_poly(std::string_view text);
BForm parse_form(std::string_view text);

// "(F1)*(F2)*..." as a list of forms; used by the classify surface.
std::vector<BForm> parse_form_factors(std::string_view text);

std::string to_string(const UPoly& u, const char* var = "x");
std::string to_string(const BPoly& f);
std::string to_string(const BForm& F);

}  // namespace bidisc

#endif
