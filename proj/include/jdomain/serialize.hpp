#ifndef JDOMAIN_SERIALIZE_HPP
#define JDOMAIN_SERIALIZE_HPP

#include "jdomain/builtins.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace jdomain {

using json = nlohmann::ordered_json;

inline constexpr int kEnvelopeVersion = 1;

struct NormalJSpec {
    LieAlgebra algebra;
    QMatrix j;
    std::optional<QVec> omega;
};

/// Parsed envelope payload; "domain" payloads are normal j-algebras as well.
using Payload = std::variant<LieAlgebra, NormalJSpec, FieldsSpec, std::vector<XiParam>>;

struct Envelope {
    std::string kind;
    Payload payload;
};

json lie_algebra_to_json(const LieAlgebra& g);
LieAlgebra lie_algebra_from_json(const json& j);
json fields_to_json(const FieldsSpec& s);
FieldsSpec fields_from_json(const json& j);

json make_envelope(const std::string& kind, json payload);
/// Throws ParseError on malformed JSON, unknown kinds, unknown or missing keys.
Envelope parse_envelope(const std::string& text);
Envelope load_envelope(const std::string& path);

std::string export_fields(const FieldsSpec& s);
std::string export_normal_j(const NormalJAlgebra& N, const std::string& kind = "normal_j");

/// "re"/"im" object for a Gaussian rational.
json gaussian_to_json(const Gaussian& g);
Gaussian gaussian_from_json(const json& j);

}  // namespace jdomain

#endif
