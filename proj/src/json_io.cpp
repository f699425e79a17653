#include "hompoly/json_io.hpp"

#include <fstream>

namespace hompoly {

namespace {

const char* const kCoordinateConvention = "b_1..b_n, then A row-major (A_11..A_1m, .., A_n1..A_nm)";

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw JsonFormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t natural(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw JsonFormatError(std::string("field \"") + key + "\" must be a natural number");
    return v.get<std::size_t>();
}

Hyperplane hyperplane_from_json(const Json& j, std::size_t dim)
{
    Hyperplane h{vector_from_json(field(j, "normal")), rational_from_json(field(j, "offset"))};
    if (h.normal.size() != dim)
        throw JsonFormatError("normal has the wrong length");
    return h;
}

std::vector<Hyperplane> hyperplanes_from_json(const Json& j, const char* key, std::size_t dim)
{
    std::vector<Hyperplane> out;
    if (!j.contains(key))
        return out;
    if (!j.at(key).is_array())
        throw JsonFormatError(std::string("field \"") + key + "\" must be an array");
    for (const auto& h : j.at(key))
        out.push_back(hyperplane_from_json(h, dim));
    return out;
}

Json descriptor_json(const PolytopeDescriptor& d, const Polytope& p)
{
    Json j;
    j["kind"] = d.kind;
    if (d.kind == "file")
        j["path"] = d.path;
    else
        j["n"] = d.n;
    j["polytope"] = to_json(p);
    return j;
}

PolytopeDescriptor descriptor_from_json(const Json& j)
{
    PolytopeDescriptor d;
    d.kind = field(j, "kind").get<std::string>();
    if (j.contains("n"))
        d.n = natural(j, "n");
    if (j.contains("path"))
        d.path = j.at("path").get<std::string>();
    return d;
}

} // namespace

Json to_json(const Rational& r)
{
    return r.str();
}

Json to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Json to_json(const QVector& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(to_json(x));
    return j;
}

Json to_json(const Hyperplane& h)
{
    return Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}};
}

Json to_json(const HRep& h)
{
    Json j;
    j["inequalities"] = Json::array();
    for (const auto& f : h.inequalities)
        j["inequalities"].push_back(to_json(f));
    j["equations"] = Json::array();
    for (const auto& e : h.equations)
        j["equations"].push_back(to_json(e));
    return j;
}

Json to_json(const Polytope& p)
{
    Json j;
    j["ambient_dim"] = p.ambient_dim();
    j["vertices"] = Json::array();
    for (const auto& v : p.vertices())
        j["vertices"].push_back(to_json(v));
    const Json h = to_json(p.hrep());
    j["inequalities"] = h["inequalities"];
    j["equations"] = h["equations"];
    return j;
}

Json to_json(const AffineMapRep& f, std::size_t rank, bool is_vertex)
{
    Json j;
    j["A"] = Json::array();
    for (std::size_t r = 0; r < f.target_dim(); ++r)
        j["A"].push_back(to_json(f.A.row_vector(r)));
    j["b"] = to_json(f.b);
    j["rank"] = rank;
    j["is_vertex"] = is_vertex;
    return j;
}

Json to_json(const HomPolytope& hom)
{
    Json j;
    j["source"] = descriptor_json(hom.source_desc, hom.source);
    j["target"] = descriptor_json(hom.target_desc, hom.target);
    j["m"] = hom.m;
    j["n"] = hom.n;
    j["dimension"] = hom.ambient_dim();
    j["coordinate_convention"] = kCoordinateConvention;
    j["inequality_count"] = hom.hrep.inequalities.size();
    j["hrep"] = to_json(hom.hrep);
    return j;
}

Json to_json(const CountReport& report)
{
    Json j;
    j["family"] = report.family;
    j["m"] = report.m;
    j["n"] = report.n;
    j["closed_form"] = to_json(report.closed_form);
    if (report.enumerated)
        j["enumerated"] = to_json(*report.enumerated);
    if (report.agreement)
        j["agreement"] = *report.agreement;
    j["terms"] = Json::array();
    for (const auto& [label, value] : report.terms)
        j["terms"].push_back(Json{{"label", label}, {"value", to_json(value)}, {"source", "closed_form"}});
    return j;
}

Json to_json(const std::vector<TableRow>& table)
{
    Json j = Json::array();
    for (const auto& row : table)
        j.push_back(Json{{"n", row.n},
                         {"perturbed_count", row.perturbed},
                         {"random_count", row.random},
                         {"bound", to_json(row.bound)},
                         {"percentage_approx", row.percentage}});
    return j;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string())
        throw JsonFormatError("rational must be a string \"p/q\" or an integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw JsonFormatError(std::string("bad rational: ") + e.what());
    }
}

QVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw JsonFormatError("vector must be an array");
    QVector v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Polytope polytope_from_json(const Json& j)
{
    const std::size_t d = natural(j, "ambient_dim");
    if (j.contains("vertices") && !j.at("vertices").empty()) {
        std::vector<QVector> pts;
        for (const auto& v : j.at("vertices")) {
            pts.push_back(vector_from_json(v));
            if (pts.back().size() != d)
                throw JsonFormatError("vertex has the wrong length");
        }
        return Polytope::from_points(d, pts);
    }
    HRep h{hyperplanes_from_json(j, "inequalities", d), hyperplanes_from_json(j, "equations", d)};
    if (h.inequalities.empty() && h.equations.empty())
        throw JsonFormatError("polytope needs vertices or inequalities");
    return Polytope::from_hrep(d, std::move(h));
}

AffineMapRep map_from_json(const Json& j)
{
    const QVector b = vector_from_json(field(j, "b"));
    const Json& rows = field(j, "A");
    if (!rows.is_array() || rows.size() != b.size())
        throw JsonFormatError("A must have one row per entry of b");
    std::vector<QVector> a;
    for (const auto& r : rows)
        a.push_back(vector_from_json(r));
    const std::size_t m = a.empty() ? 0 : a.front().size();
    for (const auto& r : a)
        if (r.size() != m)
            throw JsonFormatError("A is ragged");
    return AffineMapRep{QMatrix::from_rows(a, m), b};
}

HomPolytope hom_from_json(const Json& j)
{
    const Json& src = field(j, "source");
    const Json& tgt = field(j, "target");
    HomPolytope hom = build_hom(polytope_from_json(field(src, "polytope")), polytope_from_json(field(tgt, "polytope")));
    hom.source_desc = descriptor_from_json(src);
    hom.target_desc = descriptor_from_json(tgt);
    if (j.contains("hrep")) {
        const std::size_t d = hom.ambient_dim();
        const HRep stored{hyperplanes_from_json(j.at("hrep"), "inequalities", d),
                          hyperplanes_from_json(j.at("hrep"), "equations", d)};
        if (!(stored == hom.hrep))
            throw JsonFormatError("stored inequality system does not match the embedded polytopes");
    }
    return hom;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw JsonFormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonFormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace hompoly
