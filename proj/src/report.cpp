#include "twobridge/report.hpp"

namespace twobridge {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

namespace {

ojson poly_json(const Poly& p) { return p.to_strings(); }
Poly poly_from(const json& j) { return Poly::from_strings(j.get<std::vector<std::string>>()); }

ojson interval_json(const RootInterval& iv) { return ojson::array({rational_str(iv.lo), rational_str(iv.hi)}); }
RootInterval interval_from(const json& j) {
    return {parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>())};
}

ojson integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}
Integer integer_from(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

ojson dims_json(const CohomologyDims& d) { return {{"z1", d.z1}, {"b1", d.b1}, {"h0", d.h0}, {"h1", d.h1}}; }
CohomologyDims dims_from(const json& j) {
    return {j.at("z1").get<int>(), j.at("b1").get<int>(), j.at("h0").get<int>(), j.at("h1").get<int>()};
}

ojson branch_json(const RootBranchReport& b) {
    ojson out;
    out["modulus_in_t"] = poly_json(b.modulus_in_t);
    out["xi_factor"] = poly_json(b.xi_factor);
    out["multiplicity_in_alexander"] = b.multiplicity_in_alexander;
    out["real_root_intervals"] = ojson::array();
    for (const auto& iv : b.real_root_intervals) out["real_root_intervals"].push_back(interval_json(iv));
    out["contains_pm1"] = b.contains_pm1;
    out["qualifying_roots"] = b.qualifying_roots;
    out["dims_knot"] = dims_json(b.dims_knot);
    out["dims_filled"] = dims_json(b.dims_filled);
    out["rigid"] = b.rigid;
    out["meridian_trace"] = ojson::array();
    for (const auto& m : b.meridian) {
        out["meridian_trace"].push_back({{"t_interval", interval_json(m.t_root)},
                                         {"xi_interval", interval_json(m.xi)},
                                         {"trace_sq_lower", rational_str(m.trace_sq_lower)},
                                         {"exceeds_four", m.exceeds_four}});
    }
    out["lineage"] = ojson::array();
    for (const auto& s : b.lineage)
        out["lineage"].push_back(
            {{"parent", poly_json(s.parent)}, {"factor", poly_json(s.factor)}, {"cofactor", poly_json(s.cofactor)}});
    return out;
}

RootBranchReport branch_from(const json& j) {
    RootBranchReport b;
    b.modulus_in_t = poly_from(j.at("modulus_in_t"));
    b.xi_factor = poly_from(j.at("xi_factor"));
    b.multiplicity_in_alexander = j.at("multiplicity_in_alexander").get<int>();
    for (const auto& iv : j.at("real_root_intervals")) b.real_root_intervals.push_back(interval_from(iv));
    b.contains_pm1 = j.at("contains_pm1").get<bool>();
    b.qualifying_roots = j.at("qualifying_roots").get<int>();
    b.dims_knot = dims_from(j.at("dims_knot"));
    b.dims_filled = dims_from(j.at("dims_filled"));
    b.rigid = j.at("rigid").get<bool>();
    for (const auto& m : j.at("meridian_trace")) {
        b.meridian.push_back({interval_from(m.at("t_interval")), interval_from(m.at("xi_interval")),
                              parse_rational(m.at("trace_sq_lower").get<std::string>()),
                              m.at("exceeds_four").get<bool>()});
    }
    for (const auto& s : j.at("lineage"))
        b.lineage.push_back({poly_from(s.at("parent")), poly_from(s.at("factor")), poly_from(s.at("cofactor"))});
    return b;
}

}  // namespace

ReportDocument make_report(const ReportDocument::Input& input, const Certificate& cert) {
    ReportDocument doc;
    doc.input = input;
    doc.input.p = cert.fraction.p;
    doc.input.q = cert.fraction.q;
    const KnotPresentation pres = build_presentation(cert.fraction);
    doc.presentation = {format_word(pres.w), format_word(pres.v), format_word(pres.relator),
                        format_word(pres.longitude), format_word(pres.meridian)};
    doc.alexander = integer_coeffs(cert.alexander);
    doc.factors = cert.roots.factors;
    doc.branches = cert.branches;
    doc.certificate = {cert.fraction.str(),       to_string(cert.verdict),   cert.qualifying_roots,
                       cert.any_qualifying_rigid, cert.all_qualifying_rigid, cert.meridian_trace_ok,
                       cert.roots.one_is_root,    cert.assumptions};
    doc.timings = cert.timings_ms;
    return doc;
}

ojson to_json(const ReportDocument& doc) {
    ojson out;
    out["schema_version"] = doc.schema_version;
    out["input"] = {{"kind", doc.input.kind}, {"value", doc.input.value}, {"p", doc.input.p}, {"q", doc.input.q}};
    out["presentation"] = {{"w", doc.presentation.w},
                           {"v", doc.presentation.v},
                           {"relator", doc.presentation.relator},
                           {"longitude", doc.presentation.longitude},
                           {"meridian", doc.presentation.meridian}};
    out["alexander"] = ojson::array();
    for (const auto& c : doc.alexander) out["alexander"].push_back(integer_json(c));
    out["factors"] = ojson::array();
    for (const auto& f : doc.factors)
        out["factors"].push_back({{"factor", poly_json(f.factor)}, {"multiplicity", f.multiplicity}});
    out["branches"] = ojson::array();
    for (const auto& b : doc.branches) out["branches"].push_back(branch_json(b));
    const auto& c = doc.certificate;
    out["certificate"] = {{"fraction", c.fraction},
                          {"verdict", c.verdict},
                          {"qualifying_roots", c.qualifying_roots},
                          {"any_qualifying_rigid", c.any_qualifying_rigid},
                          {"all_qualifying_rigid", c.all_qualifying_rigid},
                          {"meridian_trace_ok", c.meridian_trace_ok},
                          {"one_is_root", c.one_is_root},
                          {"assumptions", c.assumptions}};
    out["timings"] = ojson::object();
    for (const auto& [k, v] : doc.timings) out["timings"][k] = v;
    return out;
}

ReportDocument report_from_json(const json& j) {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1") throw std::invalid_argument("unsupported schema_version " + doc.schema_version);
    const auto& in = j.at("input");
    doc.input = {in.at("kind").get<std::string>(), in.at("value").get<std::string>(), in.at("p").get<std::int64_t>(),
                 in.at("q").get<std::int64_t>()};
    const auto& pr = j.at("presentation");
    doc.presentation = {pr.at("w").get<std::string>(), pr.at("v").get<std::string>(),
                        pr.at("relator").get<std::string>(), pr.at("longitude").get<std::string>(),
                        pr.at("meridian").get<std::string>()};
    for (const auto& c : j.at("alexander")) doc.alexander.push_back(integer_from(c));
    for (const auto& f : j.at("factors"))
        doc.factors.push_back({poly_from(f.at("factor")), f.at("multiplicity").get<int>()});
    for (const auto& b : j.at("branches")) doc.branches.push_back(branch_from(b));
    const auto& c = j.at("certificate");
    doc.certificate = {c.at("fraction").get<std::string>(),
                       c.at("verdict").get<std::string>(),
                       c.at("qualifying_roots").get<int>(),
                       c.at("any_qualifying_rigid").get<bool>(),
                       c.at("all_qualifying_rigid").get<bool>(),
                       c.at("meridian_trace_ok").get<bool>(),
                       c.at("one_is_root").get<bool>(),
                       c.at("assumptions").get<std::vector<std::string>>()};
    for (const auto& [k, v] : j.at("timings").items()) doc.timings[k] = v.get<double>();
    return doc;
}

}  // namespace twobridge
