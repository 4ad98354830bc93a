#pragma once

#include <string>

#include "json.hpp"

#include "formclass/classgroup.hpp"
#include "formclass/forms.hpp"
#include "formclass/modules.hpp"
#include "formclass/rings.hpp"

namespace formclass {

// Key order is fixed at construction, making serialized output byte-stable.
using Json = nlohmann::ordered_json;

// Numbers that fit in 64 bits are emitted as JSON integers; anything larger
// becomes a decimal string, so no reader ever loses precision.
Json int_to_json(const Int& v);

// Accepts either encoding; throws validation_error on anything else
// (including malformed digit strings).
Int int_from_json(const Json& j);

// Parse a decimal integer token (CLI argument); throws validation_error on
// malformed input.
Int parse_int(const std::string& text);

// {"a": ..., "b": ..., "c": ...}
Json to_json(const BinaryForm& f);

// Compact coefficient triple [a, b, c].
Json form_to_array(const BinaryForm& f);

// Flat row-major entries [p, q, r, s].
Json to_json(const UnimodularMap& m);

// {"t": ..., "n": ...}
Json to_json(const QuadraticRing& r);

// {"ring": {...}, "a": ..., "b": ..., "c": ..., "shift": ...}
Json to_json(const GoodFrameModule& I);

// "wide" or "narrow"
std::string variant_name(Variant v);

// {"disc", "variant", "h", "structure", "reps", "table"}: structure is the
// list of cyclic-factor orders, reps are coefficient triples, table is the
// full composition table of representative indices.
Json to_json(const ClassGroup& G);

}  // namespace formclass
