#include "exalg/json_io.hpp"

namespace exalg {
namespace io {

Json field_to_json(const FieldDesc& d) {
  Json j;
  switch (d.kind) {
    case FieldDesc::Kind::Rationals:
      j["kind"] = "Q";
      break;
    case FieldDesc::Kind::Prime:
      j["kind"] = "Fp";
      j["p"] = d.p;
      break;
    case FieldDesc::Kind::RationalFunctions:
      j["kind"] = "FpT";
      j["p"] = d.p;
      j["var"] = d.var;
      break;
    case FieldDesc::Kind::Extension:
      j["kind"] = "ext";
      j["base"] = field_to_json(*d.base);
      j["minpoly"] = d.minpoly;
      break;
  }
  return j;
}

FieldDesc field_desc_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind"), Err::ParseError, "field descriptor needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return FieldDesc::rationals();
  if (kind == "Fp") {
    require(j.contains("p"), Err::ParseError, "Fp needs p");
    return FieldDesc::prime(j.at("p").get<uint64_t>());
  }
  if (kind == "FpT") {
    require(j.contains("p"), Err::ParseError, "FpT needs p");
    std::string var = j.value("var", std::string("t"));
    return FieldDesc::rational_functions(j.at("p").get<uint64_t>(), var);
  }
  if (kind == "ext") {
    require(j.contains("base") && j.contains("minpoly"), Err::ParseError,
            "ext needs base and minpoly");
    FieldDesc base = field_desc_from_json(j.at("base"));
    std::vector<std::string> mp;
    for (const auto& c : j.at("minpoly")) mp.push_back(c.get<std::string>());
    return FieldDesc::extension(std::move(base), std::move(mp));
  }
  fail(Err::ParseError, "unknown field kind: " + kind);
}

Json element_to_json(const Field& f, const std::vector<Scalar>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(f.to_string(s));
  return arr;
}

std::vector<Scalar> element_from_json(const Field& f, const Json& j) {
  require(j.is_array(), Err::ParseError, "element must be an array of scalar strings");
  std::vector<Scalar> v;
  for (const auto& c : j) v.push_back(f.parse(c.get<std::string>()));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(element_to_json(m.field(), m.row(i)));
  return rows;
}

Matrix matrix_from_json(const Field& f, FieldRef fr, const Json& j) {
  (void)fr;
  require(j.is_array(), Err::ParseError, "matrix must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) rows.push_back(element_from_json(f, r));
  if (rows.empty()) return Matrix(&f, 0, 0);
  return Matrix::from_rows(f, rows);
}

Json subspace_to_json(const linalg::SubspaceBasis& s) { return matrix_to_json(s.basis); }

Json algebra_to_json(const FDAlgebra& a) {
  const Field& F = a.field();
  Json j;
  j["field"] = field_to_json(F.desc());
  j["dim"] = a.dim();
  Json mul = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int jj = 0; jj < a.dim(); ++jj)
      for (const auto& t : a.table()[static_cast<size_t>(i) * a.dim() + jj])
        mul.push_back(Json::array({i, jj, t.k, F.to_string(t.coeff)}));
  j["mul"] = std::move(mul);
  if (!a.labels().empty()) j["labels"] = a.labels();
  if (a.is_unital()) j["identity"] = element_to_json(F, a.identity());
  return j;
}

FDAlgebra algebra_from_json(const Json& j) {
  require(j.is_object() && j.contains("field") && j.contains("dim") && j.contains("mul"),
          Err::ParseError, "algebra needs field, dim, mul");
  FieldRef f = make_field(field_desc_from_json(j.at("field")));
  int n = j.at("dim").get<int>();
  require(n >= 0 && n <= 4096, Err::ParseError, "bad dimension");
  FDAlgebra::Table tab(static_cast<size_t>(n) * n);
  for (const auto& e : j.at("mul")) {
    require(e.is_array() && e.size() == 4, Err::ParseError, "mul entries are [i,j,k,scalar]");
    int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    require(i >= 0 && i < n && jj >= 0 && jj < n && k >= 0 && k < n, Err::ParseError,
            "mul index out of range");
    tab[static_cast<size_t>(i) * n + jj].push_back({k, f->parse(e[3].get<std::string>())});
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  // construction re-checks associativity on load
  return FDAlgebra::make(f, n, std::move(tab), std::move(labels));
}

Json extension_to_json(const ExtensionInstance& e) {
  Json j;
  j["algebra"] = algebra_to_json(e.q.ambient);
  j["ideal"] = subspace_to_json(e.q.ideal);
  j["certificates"] = Json{{"ideal", alg_class_name(e.ideal_class)},
                           {"quotient", alg_class_name(e.quotient_class)}};
  return j;
}

ExtensionInstance extension_from_json(const Json& j) {
  require(j.is_object() && j.contains("algebra") && j.contains("ideal"), Err::ParseError,
          "extension needs algebra and ideal");
  FDAlgebra a = algebra_from_json(j.at("algebra"));
  Matrix rows = matrix_from_json(a.field(), a.field_ref(), j.at("ideal"));
  linalg::SubspaceBasis jb =
      rows.rows() == 0 ? linalg::subspace_zero(a.field(), a.dim())
                       : linalg::subspace_from_rows(rows);
  ExtensionInstance e;
  e.q = algcore::quotient(a, jb);
  if (j.contains("certificates")) {
    const auto& c = j.at("certificates");
    if (c.contains("ideal")) e.ideal_class = alg_class_from_name(c.at("ideal").get<std::string>());
    if (c.contains("quotient"))
      e.quotient_class = alg_class_from_name(c.at("quotient").get<std::string>());
  }
  return e;
}

Json wedderburn_to_json(const FDAlgebra& a, const WedderburnReport& r) {
  const Field& F = a.field();
  Json j;
  j["dim"] = a.dim();
  j["radical_dim"] = r.radical.dim();
  j["radical"] = subspace_to_json(r.radical);
  j["semisimple"] = r.semisimple;
  j["matricial"] = r.matricial;
  j["fdss"] = r.fdss;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["n"] = c.matrix_size;
    cj["d"] = c.division_dim;
    cj["dim"] = c.dim;
    cj["split"] = c.split;
    cj["central_idempotent"] = element_to_json(F, c.central_idempotent);
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

Json matrix_units_to_json(const Field& f, const MatrixUnitsSystem& u) {
  Json j;
  j["sizes"] = u.sizes;
  Json blocks = Json::array();
  for (size_t s = 0; s < u.units.size(); ++s) {
    Json blk = Json::array();
    for (const auto& row : u.units[s]) {
      Json rj = Json::array();
      for (const auto& e : row) rj.push_back(element_to_json(f, e));
      blk.push_back(std::move(rj));
    }
    blocks.push_back(std::move(blk));
  }
  j["units"] = std::move(blocks);
  return j;
}

}  // namespace io
}  // namespace exalg
