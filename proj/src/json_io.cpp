#include "formclass/json_io.hpp"

#include <cstddef>

#include "formclass/errors.hpp"

namespace formclass {

Json int_to_json(const Int& v) {
    if (fits_int64(v)) return Json(to_int64(v));
    return Json(to_string(v));
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw validation_error("expected an integer or a decimal string");
}

Int parse_int(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    bool ok = text.size() > start;
    for (std::size_t i = start; ok && i < text.size(); ++i)
        ok = text[i] >= '0' && text[i] <= '9';
    check_input(ok, "malformed integer: " + text);
    return Int(text);
}

Json to_json(const BinaryForm& f) {
    Json j = Json::object();
    j["a"] = int_to_json(f.a);
    j["b"] = int_to_json(f.b);
    j["c"] = int_to_json(f.c);
    return j;
}

Json form_to_array(const BinaryForm& f) {
    return Json::array({int_to_json(f.a), int_to_json(f.b), int_to_json(f.c)});
}

Json to_json(const UnimodularMap& m) {
    return Json::array(
        {int_to_json(m.p), int_to_json(m.q), int_to_json(m.r), int_to_json(m.s)});
}

Json to_json(const QuadraticRing& r) {
    Json j = Json::object();
    j["t"] = int_to_json(r.t);
    j["n"] = int_to_json(r.n);
    return j;
}

Json to_json(const GoodFrameModule& I) {
    Json j = Json::object();
    j["ring"] = to_json(I.ring);
    j["a"] = int_to_json(I.a);
    j["b"] = int_to_json(I.b);
    j["c"] = int_to_json(I.c);
    j["shift"] = int_to_json(I.shift);
    return j;
}

std::string variant_name(Variant v) {
    return v == Variant::narrow ? "narrow" : "wide";
}

Json to_json(const ClassGroup& G) {
    Json j = Json::object();
    j["disc"] = int_to_json(G.disc);
    j["variant"] = variant_name(G.variant);
    j["h"] = G.reps.size();
    Json structure = Json::array();
    for (const CyclicFactor& f : G.structure) structure.push_back(f.order);
    j["structure"] = structure;
    Json reps = Json::array();
    for (const BinaryForm& f : G.reps) reps.push_back(form_to_array(f));
    j["reps"] = reps;
    j["table"] = G.table;
    return j;
}

}  // namespace formclass
