#pragma once

#include <string>

#include "liecoh/cochain.hpp"
#include "liecoh/exterior.hpp"
#include "liecoh/family.hpp"
#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Algebra format (round-trip exact):
/// { "dim": 4, "names": ["X1",...],
///   "brackets": [ {"i":1,"j":2,"v":{"1":"1"}}, ... ] }
/// Only pairs i < j appear, absent pairs are zero brackets, and "v" maps the
/// 1-based target index to a reduced rational string.
std::string algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const std::string& text);

/// Cochains serialize as [{"args":[2,3],"target":3,"c":"1"}, ...], sorted.
std::string cochain_to_json(const Cochain& f);
Cochain cochain_from_json(const std::string& text, int degree, int dim);

/// 1-forms serialize as {"1":"1","3":"-2/5"} (index -> rational string).
std::string one_form_to_json(const KForm& f);
KForm one_form_from_json(const std::string& text, int dim);

/// Stable-field-order suite report, see the README for the schema.
std::string suite_report_to_json(const SuiteReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace liecoh
