#pragma once

#include <string>

#include <json.hpp>

#include "exalg/algebra.hpp"
#include "exalg/structure.hpp"

namespace exalg {

using Json = nlohmann::ordered_json;

namespace io {

Json field_to_json(const FieldDesc& d);
FieldDesc field_desc_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, FieldRef fr, const Json& j);

Json subspace_to_json(const linalg::SubspaceBasis& s);

Json element_to_json(const Field& f, const std::vector<Scalar>& v);
std::vector<Scalar> element_from_json(const Field& f, const Json& j);

// {"field":..., "dim":n, "mul":[[i,j,k,"scalar"],...], "labels":[...], "identity":[...]? }
Json algebra_to_json(const FDAlgebra& a);
FDAlgebra algebra_from_json(const Json& j);

// {"algebra":..., "ideal":[...rows...], "certificates":{"ideal":..., "quotient":...}}
Json extension_to_json(const ExtensionInstance& e);
ExtensionInstance extension_from_json(const Json& j);

Json wedderburn_to_json(const FDAlgebra& a, const WedderburnReport& r);
Json matrix_units_to_json(const Field& f, const MatrixUnitsSystem& u);

}  // namespace io
}  // namespace exalg
