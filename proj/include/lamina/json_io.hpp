#pragma once

#include "lamina/entropy.hpp"
#include "lamina/lamination.hpp"
#include "lamina/major.hpp"
#include "lamina/rectangles.hpp"

#include <string>
#include <vector>

namespace lamina {

// Angles travel as reduced "p/q" strings in all formats. Output is always
// canonical (classes sorted by least angle); input tolerates unsorted and
// unreduced fractions.

std::string major_to_json(const PrimitiveMajor& m);
PrimitiveMajor major_from_json(const std::string& text);

std::string lamination_to_json(const FiniteLamination& lam);
FiniteLamination lamination_from_json(const std::string& text);

std::string rectangles_to_json(const RectangleSet& r);
RectangleSet rectangles_from_json(const std::string& text);

/// CSV with header theta_num,theta_den,rho,entropy,dimension and nine
/// decimal places on the floating-point columns.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);  // "-" reads stdin
void write_text_file(const std::string& path, const std::string& text);

} // namespace lamina
