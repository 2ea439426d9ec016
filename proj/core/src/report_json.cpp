#include "wspin/report_json.hpp"

#include "wspin/error.hpp"
#include "wspin/nondegeneracy.hpp"
#include "wspin/radial.hpp"
#include "wspin/resultant.hpp"
#include "wspin/root_bounds.hpp"
#include "wspin/symmetry.hpp"
#include "wspin/weights.hpp"

namespace wspin {

namespace {

using json = nlohmann::ordered_json;

json rational_array(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

json complex_pair(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

}  // namespace

json analyze_report(const QHPolynomial& w, std::uint64_t seed) {
    const WeightProfile profile = growth_exponents(w);
    const CompactnessReport ranges = compactness_ranges(w);
    const auto group = symmetry_group(w);
    const NondegeneracyReport nondeg = check_nondegenerate(w, seed);

    json doc;
    doc["polynomial"] = format_poly(w);
    doc["q"] = rational_array(profile.q);
    doc["d"] = profile.d.str();
    json k = json::array();
    for (const auto& ki : profile.k) k.push_back(ki.str());
    doc["k"] = k;
    doc["delta"] = to_string(profile.delta0);
    doc["delta_i"] = rational_array(profile.delta);
    json kappa = json::array();
    for (const auto& ki : profile.kappa)
        kappa.push_back(ki ? json(to_string(*ki)) : json(nullptr));
    doc["kappa_i"] = kappa;
    doc["lp1_sup"] = to_string(ranges.lp1_sup);
    doc["lp_sup"] = rational_array(ranges.lp_sup);
    doc["inner_applicable"] = ranges.inner_applicable;
    doc["strong_applicable"] = ranges.strong_applicable;
    doc["group_order"] = group.size();

    switch (nondeg.verdict) {
        case NondegVerdict::proved: doc["nondegenerate"] = true; break;
        case NondegVerdict::refuted: doc["nondegenerate"] = false; break;
        case NondegVerdict::inconclusive: doc["nondegenerate"] = nullptr; break;
    }
    doc["nondegeneracy_detail"] = nondeg.detail;
    if (nondeg.witness) {
        json witness = json::array();
        for (const auto& z : *nondeg.witness) witness.push_back(complex_pair(z));
        doc["witness"] = witness;
    }
    return doc;
}

json group_report(const QHPolynomial& w) {
    const auto group = symmetry_group(w);
    json doc;
    doc["polynomial"] = format_poly(w);
    doc["order"] = group.size();
    json elements = json::array();
    for (const auto& element : group) elements.push_back(rational_array(element.a));
    doc["elements"] = elements;
    return doc;
}

json curve_report(const SpinCurveSpec& spec, const std::optional<Rational>& p) {
    const MarkClassification cls = classify_marks(spec);
    const DegreeReport degrees = bundle_degrees(spec);

    json doc;
    doc["genus"] = spec.genus;
    doc["superpotential"] = format_poly(spec.w);
    json marks = json::array();
    for (std::size_t l = 0; l < spec.marks.size(); ++l) {
        json mark;
        mark["label"] = spec.marks[l].label;
        mark["phases"] = rational_array(cls.phase[l]);
        mark["c"] = rational_array(cls.c[l]);
        json ramond = json::array();
        for (const bool flag : cls.ramond[l]) ramond.push_back(flag);
        mark["ramond"] = ramond;
        json mono = json::array();
        for (const bool flag : cls.monomial_ramond[l]) mono.push_back(flag);
        mark["monomial_ramond"] = mono;
        marks.push_back(std::move(mark));
    }
    doc["marks"] = marks;
    doc["degrees"] = rational_array(degrees.deg);
    doc["admissible"] = degrees.admissible;

    if (p) {
        doc["p"] = to_string(*p);
        json shifts;
        for (std::size_t j = 0; j < spec.w.variable_count(); ++j) {
            const std::string& name = spec.w.variables()[j];
            try {
                shifts[name] = index_shift(spec, j, *p);
            } catch (const DomainError&) {
                shifts[name] = nullptr;  // p outside this variable's window
            }
        }
        doc["index_shift"] = shifts;
    }
    return doc;
}

json eliminate_report(const QHPolynomial& w, const std::string& var) {
    const MPoly elim = elimination_poly(w, var);
    json doc;
    doc["polynomial"] = format_poly(w);
    doc["variable"] = var;
    doc["elimination"] = elim.to_string_by_var(0);
    doc["degree"] = elim.degree_in(0);
    return doc;
}

json bound_certified_report(const QHPolynomial& w,
                            const std::vector<std::complex<double>>& s) {
    const WeightProfile profile = growth_exponents(w);
    const GradientBound bound = gradient_bound(w, s);

    json doc;
    doc["polynomial"] = format_poly(w);
    doc["mode"] = "certified";
    json sv = json::array();
    for (const auto& z : s) sv.push_back(complex_pair(z));
    doc["s"] = sv;
    doc["delta_i"] = rational_array(profile.delta);
    doc["D"] = bound.D;
    doc["C"] = bound.C;
    json elim = json::array();
    for (const auto& e : bound.elimination) elim.push_back(e.to_string_by_var(0));
    doc["elimination"] = elim;
    return doc;
}

json bound_empirical_report(const QHPolynomial& w, int samples, std::uint64_t seed) {
    const EmpiricalBound bound = empirical_bound(w, samples, seed);

    json doc;
    doc["polynomial"] = format_poly(w);
    doc["mode"] = "empirical";
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["delta_i"] = rational_array(bound.delta);
    doc["radii"] = bound.radii;
    doc["sup_by_radius"] = bound.sup_by_radius;
    doc["sup_ratio"] = bound.sup_ratio;
    json verdicts = json::array();
    for (const auto v : bound.verdict) verdicts.push_back(to_string(v));
    doc["verdict"] = verdicts;
    return doc;
}

json identity_report(int r, double u0) {
    const ResiduePair pair = residue_pair(r, u0);
    const double reference = 3.14159265358979323846264338328 * pair.residue;
    json doc;
    doc["r"] = r;
    doc["u0"] = u0;
    doc["R"] = pair.residue;
    doc["E"] = pair.energy;
    doc["rel_err"] = std::abs(pair.energy - reference) / std::abs(reference);
    return doc;
}

std::string render_text(const nlohmann::ordered_json& doc) {
    std::string out;
    for (const auto& [key, value] : doc.items()) {
        out += key;
        out += ": ";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += '\n';
    }
    return out;
}

}  // namespace wspin
