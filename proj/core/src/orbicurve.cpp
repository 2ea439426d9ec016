#include "wspin/orbicurve.hpp"

#include <algorithm>
#include <set>

#include "wspin/error.hpp"

namespace wspin {

void validate_spec(const SpinCurveSpec& spec) {
    if (spec.genus < 0) throw InvalidParameter("genus must be nonnegative");
    const std::size_t t = spec.w.variable_count();
    std::set<std::string> labels;
    for (const auto& mark : spec.marks) {
        if (mark.label.empty()) throw InvalidParameter("mark label is empty");
        if (!labels.insert(mark.label).second)
            throw InvalidParameter("duplicate mark label '" + mark.label + "'");
        if (mark.decoration.a.size() != t)
            throw InvalidParameter("mark '" + mark.label + "' needs one phase per variable");
        if (!in_symmetry_group(spec.w, mark.decoration))
            throw DecorationNotInGroup("decoration at mark '" + mark.label +
                                       "' is not a symmetry of the superpotential");
    }
}

MarkClassification classify_marks(const SpinCurveSpec& spec) {
    validate_spec(spec);
    const WeightProfile profile = infer_weights(spec.w);
    const std::size_t t = spec.w.variable_count();
    const auto& monos = spec.w.monomials();
    const std::size_t k = spec.marks.size();

    MarkClassification out;
    out.phase.resize(k);
    out.c.resize(k);
    out.ramond.resize(k);
    out.monomial_ramond.resize(k);

    for (std::size_t l = 0; l < k; ++l) {
        const auto& a = spec.marks[l].decoration.a;
        out.phase[l] = a;
        out.c[l].resize(t);
        out.ramond[l].resize(t);
        for (std::size_t j = 0; j < t; ++j) {
            out.c[l][j] = a[j] - profile.q[j];
            out.ramond[l][j] = a[j] == 0;
        }
        out.monomial_ramond[l].resize(monos.size());
        for (std::size_t i = 0; i < monos.size(); ++i) {
            bool all_ramond = true;
            for (std::size_t j = 0; j < t; ++j)
                if (monos[i].exponents[j] > 0 && !out.ramond[l][j]) {
                    all_ramond = false;
                    break;
                }
            out.monomial_ramond[l][i] = all_ramond;
        }
    }
    return out;
}

DegreeReport bundle_degrees(const SpinCurveSpec& spec) {
    validate_spec(spec);
    const WeightProfile profile = infer_weights(spec.w);
    const std::size_t t = spec.w.variable_count();
    const Rational euler = 2 * spec.genus - 2 + static_cast<int>(spec.marks.size());

    DegreeReport report;
    report.deg.resize(t);
    report.admissible = true;
    for (std::size_t j = 0; j < t; ++j) {
        Rational deg = profile.q[j] * euler;
        for (const auto& mark : spec.marks) deg -= mark.decoration.a[j];
        report.deg[j] = deg;
        if (!is_integer(deg)) report.admissible = false;
    }
    return report;
}

FredholmReport fredholm_weights(const SpinCurveSpec& spec, std::size_t j,
                                const Rational& p) {
    validate_spec(spec);
    const WeightProfile profile = infer_weights(spec.w);
    if (j >= spec.w.variable_count())
        throw InvalidParameter("variable index out of range");
    if (p <= 1) throw POutOfRange("integrability exponent p must exceed 1");

    const Rational q = profile.q[j];
    const Rational two_over_p = Rational(2) / p;

    FredholmReport report;
    report.variable = j;
    report.p = p;
    report.condition_i = true;
    bool negative_c = false;
    bool fredholm_marks = true;
    for (const auto& mark : spec.marks) {
        const Rational a = mark.decoration.a[j];
        const Rational shifted = a - q + two_over_p;
        report.kappa.push_back(-shifted);
        const bool nonresonant = !is_integer(shifted);
        report.mark_nonresonant.push_back(nonresonant);
        if (!nonresonant) report.condition_i = false;
        if (a < q) negative_c = true;
        if (shifted == 1 || shifted == 2) fredholm_marks = false;
    }
    report.condition_ii = !negative_c || p < Rational(2) / q;
    report.valid = report.condition_i && report.condition_ii;
    report.fredholm = fredholm_marks && p < Rational(2) / q;
    return report;
}

int index_change(const std::vector<Rational>& kappa1,
                 const std::vector<Rational>& kappa2) {
    if (kappa1.size() != kappa2.size())
        throw InvalidParameter("weight vectors have different lengths");
    int total = 0;
    for (std::size_t e = 0; e < kappa1.size(); ++e) {
        if (kappa1[e] > kappa2[e])
            throw InvalidParameter("weight vectors must be ordered componentwise");
        if (is_integer(kappa1[e]) || is_integer(kappa2[e]))
            throw SpectrumTouched("weight vector component lies on the spectrum");
        // Number of integers strictly between two non-integers.
        const Integer crossings = floor_rational(kappa2[e]) - floor_rational(kappa1[e]);
        total += static_cast<int>(crossings);
    }
    return total;
}

int index_shift(const SpinCurveSpec& spec, std::size_t j, const Rational& p) {
    validate_spec(spec);
    const WeightProfile profile = infer_weights(spec.w);
    if (j >= spec.w.variable_count())
        throw InvalidParameter("variable index out of range");

    const Rational q = profile.q[j];
    int negatives = 0;
    bool has_positive = false;
    Rational min_positive;
    for (const auto& mark : spec.marks) {
        const Rational c = mark.decoration.a[j] - q;
        if (c < 0) ++negatives;
        if (c > 0 && (!has_positive || c < min_positive)) {
            has_positive = true;
            min_positive = c;
        }
    }

    // Interval of the index statement: (2, 2/(1 - delta_bar)) where
    // delta_bar is the smallest positive c_{jl}; with no positive c the cap
    // degenerates to the integrability limit 2/q_j.
    const Rational cap = has_positive ? Rational(2) / (1 - min_positive) : Rational(2) / q;
    if (p <= 2 || p >= cap)
        throw POutOfRange("p must lie in (2, " + to_string(cap) + ")");

    const FredholmReport fr = fredholm_weights(spec, j, p);
    if (!fr.condition_i)
        throw SpectrumTouched("weights at this p touch the spectrum");
    return negatives;
}

std::complex<double> residue_sum(
    const SpinCurveSpec& spec,
    const std::map<std::string, std::vector<std::complex<double>>>& boundary_values) {
    const MarkClassification cls = classify_marks(spec);
    const auto& monos = spec.w.monomials();
    const std::size_t t = spec.w.variable_count();

    std::set<std::string> ramond_labels;
    for (std::size_t l = 0; l < spec.marks.size(); ++l)
        if (std::find(cls.monomial_ramond[l].begin(), cls.monomial_ramond[l].end(),
                      true) != cls.monomial_ramond[l].end())
            ramond_labels.insert(spec.marks[l].label);

    for (const auto& [label, values] : boundary_values) {
        if (!ramond_labels.count(label))
            throw InvalidParameter("boundary value at '" + label +
                                   "' which carries no Ramond monomial");
        if (values.size() != t)
            throw InvalidParameter("boundary value at '" + label +
                                   "' needs one entry per variable");
    }

    std::complex<double> total = 0.0;
    for (std::size_t l = 0; l < spec.marks.size(); ++l) {
        const std::string& label = spec.marks[l].label;
        if (!ramond_labels.count(label)) continue;
        const auto it = boundary_values.find(label);
        if (it == boundary_values.end())
            throw MissingBoundaryValue("no boundary value at Ramond mark '" + label + "'");
        const auto& u = it->second;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (!cls.monomial_ramond[l][i]) continue;
            std::complex<double> term = to_double(monos[i].coeff);
            for (std::size_t jv = 0; jv < t; ++jv)
                for (int e = 0; e < monos[i].exponents[jv]; ++e) term *= u[jv];
            total += term;
        }
    }
    return total;
}

nlohmann::ordered_json curve_spec_to_json(const SpinCurveSpec& spec) {
    validate_spec(spec);
    nlohmann::ordered_json doc;
    doc["genus"] = spec.genus;
    doc["superpotential"] = format_poly(spec.w);
    doc["marks"] = nlohmann::ordered_json::array();
    for (const auto& mark : spec.marks) {
        nlohmann::ordered_json m;
        m["label"] = mark.label;
        m["phases"] = nlohmann::ordered_json::array();
        for (const auto& a : mark.decoration.a) m["phases"].push_back(to_string(a));
        doc["marks"].push_back(std::move(m));
    }
    return doc;
}

SpinCurveSpec curve_spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("curve spec must be a JSON object", 0);
    for (const char* field : {"genus", "superpotential", "marks"})
        if (!doc.contains(field))
            throw ParseError(std::string("curve spec is missing '") + field + "'", 0);
    if (!doc["genus"].is_number_integer())
        throw ParseError("'genus' must be an integer", 0);
    if (!doc["superpotential"].is_string())
        throw ParseError("'superpotential' must be a string", 0);
    if (!doc["marks"].is_array()) throw ParseError("'marks' must be an array", 0);

    QHPolynomial w = parse_poly(doc["superpotential"].get<std::string>());
    std::vector<Mark> marks;
    for (const auto& entry : doc["marks"]) {
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("phases") ||
            !entry["label"].is_string() || !entry["phases"].is_array())
            throw ParseError("each mark needs a 'label' string and 'phases' array", 0);
        Mark mark;
        mark.label = entry["label"].get<std::string>();
        for (const auto& phase : entry["phases"]) {
            if (!phase.is_string())
                throw ParseError("phases must be strings like \"1/3\"", 0);
            mark.decoration.a.push_back(parse_rational(phase.get<std::string>()));
        }
        if (mark.decoration.a.size() != w.variable_count())
            throw ParseError("mark '" + mark.label + "' needs one phase per variable", 0);
        marks.push_back(std::move(mark));
    }

    SpinCurveSpec spec{doc["genus"].get<int>(), std::move(w), std::move(marks)};
    validate_spec(spec);
    return spec;
}

}  // namespace wspin
