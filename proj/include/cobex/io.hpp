#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cobex/applications.hpp"
#include "cobex/cochain.hpp"
#include "cobex/cohomology.hpp"
#include "cobex/complex.hpp"
#include "cobex/expansion.hpp"
#include "cobex/tester.hpp"

namespace cobex::io {

/// Complex file: one face per line as whitespace-separated non-negative
/// vertex labels; '#' starts a comment; blank lines are skipped. The
/// complex is the downward closure of the listed faces.
Complex parse_complex(std::istream& in);
Complex parse_complex_file(const std::string& path);

/// Maximal faces in canonical order, one per line. parse(serialize(x))
/// reproduces x exactly.
std::string serialize_complex(const Complex& x);

/// Cochain file: a "dim <i>" header line, then one i-face per line. Every
/// face must be present in the complex at dimension i.
Cochain parse_cochain(std::istream& in, const Complex& x);
Cochain parse_cochain_file(const std::string& path, const Complex& x);
std::string serialize_cochain(const Complex& x, const Cochain& c);

/// Sign matrix file: one row per line of whitespace-separated +1/-1.
SignMatrix parse_sign_matrix(std::istream& in);
SignMatrix parse_sign_matrix_file(const std::string& path);

/// {"num": n, "den": d, "approx": "0.500000"} — approx is display-only.
nlohmann::json rational_json(const Rational& r);

/// Support of a cochain as a list of faces (each a list of vertex ids).
nlohmann::json faces_json(const Complex& x, const Cochain& c);

nlohmann::json tester_report_json(const TesterReport& rep);
nlohmann::json expansion_result_json(const Complex& x, const ExpansionResult& res);
nlohmann::json certificate_json(const Complex& x, const TestabilityCertificate& cert);
nlohmann::json girth_report_json(const GirthReport& rep);
nlohmann::json tensor_report_json(const TensorReport& rep);
nlohmann::json seidel_report_json(const SeidelReport& rep);
nlohmann::json info_json(const Complex& x);

}  // namespace cobex::io
