#ifndef HOMPOLY_JSON_IO_HPP
#define HOMPOLY_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hompoly/counts.hpp"
#include "hompoly/experiments.hpp"
#include "hompoly/hom.hpp"

namespace hompoly {

using Json = nlohmann::ordered_json;

/// Thrown for any structurally invalid document.
class JsonFormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Json to_json(const Integer& z);
Json to_json(const QVector& v);
Json to_json(const Hyperplane& h);
Json to_json(const HRep& h);
Json to_json(const Polytope& p);
/// "rank" and "is_vertex" are supplied by the caller.
Json to_json(const AffineMapRep& f, std::size_t rank, bool is_vertex);
Json to_json(const HomPolytope& hom);
Json to_json(const CountReport& report);
Json to_json(const std::vector<TableRow>& table);

/// Accepts "p/q", "p" or a JSON integer.
Rational rational_from_json(const Json& j);
QVector vector_from_json(const Json& j);
/// Vertices, when present, are taken as a point cloud and reduced to the hull.
Polytope polytope_from_json(const Json& j);
AffineMapRep map_from_json(const Json& j);
/// Rebuilds the system from the embedded polytopes and checks it matches.
HomPolytope hom_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace hompoly

#endif // HOMPOLY_JSON_IO_HPP
