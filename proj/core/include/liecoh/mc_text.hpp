#pragma once

#include <string>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Plain-text Maurer-Cartan format:
///
///   # comment
///   dim 4
///   dw1 = w1^w2 + w3^w4
///   dw3 = 3 w2^w3
///   dw4 = -4 w2^w4
///
/// Coefficients are rationals ("n" or "n/d", optional '*'), monomials are
/// wi^wj; wj^wi is accepted and normalized with the sign flipped. Forms whose
/// differential is zero may be omitted or written "dwk = 0".
MaurerCartan parse_maurer_cartan(const std::string& text);

std::string render_maurer_cartan(const MaurerCartan& mc);

} // namespace liecoh
