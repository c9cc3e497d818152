#include "treelim/curve.hpp"

#include <json.hpp>

#include "treelim/expr.hpp"

namespace treelim {

namespace {

using json = nlohmann::ordered_json;

RationalFunction parse_entry(const json& cell, const std::string& where) {
    if (!cell.is_string())
        throw CurveSpecError("matrix entry must be a string (" + where + ")");
    try {
        return parse_rational_function(cell.get<std::string>(), 't');
    } catch (const ExprParseError& e) {
        throw CurveSpecError("bad rational function in " + where + ": " + e.what());
    }
}

}  // namespace

CurveSpec parse_curve_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw CurveSpecError(std::string("malformed curve spec document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_object())
        throw CurveSpecError("curve spec must be an object with a \"generators\" map");

    std::string letters;
    for (auto it = doc["generators"].begin(); it != doc["generators"].end(); ++it) {
        if (it.key().size() != 1)
            throw CurveSpecError("generator name must be a single letter: \"" + it.key() + "\"");
        letters += it.key()[0];
    }
    std::optional<Alphabet> alphabet_opt;
    try {
        alphabet_opt.emplace(letters);
    } catch (const WordError& e) {
        throw CurveSpecError(std::string("bad generator set: ") + e.what());
    }
    const Alphabet& alphabet = *alphabet_opt;

    std::vector<Mat2Q> matrices;
    for (auto it = doc["generators"].begin(); it != doc["generators"].end(); ++it) {
        const json& m = it.value();
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
            m[0].size() != 2 || m[1].size() != 2)
            throw CurveSpecError("generator \"" + it.key() + "\" must be a 2x2 array");
        Mat2Q mat{parse_entry(m[0][0], it.key() + "[0][0]"),
                  parse_entry(m[0][1], it.key() + "[0][1]"),
                  parse_entry(m[1][0], it.key() + "[1][0]"),
                  parse_entry(m[1][1], it.key() + "[1][1]")};
        RationalFunction det = mat.det();
        if (!(det == RationalFunction::one()))
            throw CurveSpecError("generator \"" + it.key() +
                                 "\" must have determinant 1, got det = " + det.str());
        matrices.push_back(std::move(mat));
    }

    CurveSpec spec{RepCurve{alphabet, std::move(matrices)}, {}, {}, std::nullopt, text};

    if (doc.contains("ends")) {
        if (!doc["ends"].is_array()) throw CurveSpecError("\"ends\" must be a list");
        for (const json& e : doc["ends"]) {
            if (e.is_string() && e.get<std::string>() == "infinity") {
                spec.ends.push_back(End::infinity());
            } else if (e.is_object() && e.contains("t0") && e["t0"].is_string()) {
                try {
                    spec.ends.push_back(End::finite(parse_gaussian(e["t0"].get<std::string>())));
                } catch (const ExprParseError& ex) {
                    throw CurveSpecError(std::string("bad t0 literal: ") + ex.what());
                }
            } else {
                throw CurveSpecError("each end must be \"infinity\" or {\"t0\": \"<literal>\"}");
            }
        }
    }
    if (spec.ends.empty()) spec.ends.push_back(End::infinity());

    if (doc.contains("words")) {
        if (!doc["words"].is_array()) throw CurveSpecError("\"words\" must be a list of strings");
        for (const json& w : doc["words"]) {
            if (!w.is_string()) throw CurveSpecError("\"words\" must be a list of strings");
            std::string s = w.get<std::string>();
            try {
                parse_word(s, alphabet);
            } catch (const WordParseError& e) {
                throw CurveSpecError("unknown generator name in word \"" + s + "\": " + e.what());
            }
            spec.words.push_back(std::move(s));
        }
    }

    if (doc.contains("ball_radius")) {
        if (!doc["ball_radius"].is_number_integer())
            throw CurveSpecError("\"ball_radius\" must be an integer");
        int r = doc["ball_radius"].get<int>();
        if (r < 0) throw CurveSpecError("\"ball_radius\" must be nonnegative");
        spec.ball_radius = r;
    }
    return spec;
}

End parse_end(const std::string& text) {
    if (text == "infinity") return End::infinity();
    const std::string prefix = "t0=";
    if (text.rfind(prefix, 0) == 0) {
        try {
            return End::finite(parse_gaussian(text.substr(prefix.size())));
        } catch (const ExprParseError& e) {
            throw CurveSpecError(std::string("bad t0 literal: ") + e.what());
        }
    }
    throw CurveSpecError("end must be \"infinity\" or \"t0=VALUE\", got \"" + text + "\"");
}

}  // namespace treelim
