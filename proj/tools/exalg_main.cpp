#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "exalg/counterexample.hpp"
#include "exalg/extensions.hpp"
#include "exalg/generator.hpp"
#include "exalg/json_io.hpp"
#include "exalg/regtools.hpp"

using namespace exalg;

namespace {

// exit-code policy: 2 when the mathematics says no, 1 when the input or
// the requested computation is out of scope
int exit_code_for(Err e) {
  switch (e) {
    case Err::NotSeparable:
    case Err::InfeasibleSystem:
    case Err::NotRegularElement:
    case Err::NotMatricial:
    case Err::NotSemisimple:
    case Err::NotSplit:
    case Err::NotSimple:
    case Err::NotAUnit:
    case Err::NotASplitting:
    case Err::NotIdempotent:
    case Err::NotASubalgebra:
    case Err::NotAComplement:
    case Err::ReduciblePolynomial:
      return 2;
    default:
      return 1;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Err::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return j;
}

FieldDesc parse_field_arg(const std::string& s) {
  if (!s.empty() && s[0] == '{') return io::field_desc_from_json(Json::parse(s));
  if (s == "Q" || s == "q") return FieldDesc::rationals();
  if (s.rfind("Fp:", 0) == 0) return FieldDesc::prime(std::stoull(s.substr(3)));
  if (s.rfind("FpT:", 0) == 0) {
    std::string rest = s.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos) return FieldDesc::rational_functions(std::stoull(rest));
    return FieldDesc::rational_functions(std::stoull(rest.substr(0, colon)),
                                         rest.substr(colon + 1));
  }
  if (s.size() >= 2 && s[0] == 'F') {
    // F5, F2t shorthands
    if (s.back() == 't') return FieldDesc::rational_functions(std::stoull(s.substr(1, s.size() - 2)));
    return FieldDesc::prime(std::stoull(s.substr(1)));
  }
  fail(Err::ParseError, "unrecognized field: " + s);
}

// block profile syntax: "2 + 1[1|0|1]" = M_2(K) (+) M_1(K[X]/(1 + X^2))
std::vector<BlockSpec> parse_profile(const std::string& s) {
  std::vector<BlockSpec> blocks;
  std::string cur;
  std::vector<std::string> parts;
  for (char c : s) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  for (auto& part : parts) {
    std::string trimmed;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (trimmed.empty()) continue;
    BlockSpec b;
    auto br = trimmed.find('[');
    if (br == std::string::npos) {
      b.n = std::stoi(trimmed);
    } else {
      b.n = std::stoi(trimmed.substr(0, br));
      require(trimmed.back() == ']', Err::ParseError, "bad block: " + part);
      std::string inner = trimmed.substr(br + 1, trimmed.size() - br - 2);
      std::string coef;
      for (char c : inner) {
        if (c == '|') {
          b.division_minpoly.push_back(coef);
          coef.clear();
        } else {
          coef.push_back(c);
        }
      }
      b.division_minpoly.push_back(coef);
    }
    require(b.n >= 1, Err::ParseError, "block size must be positive");
    blocks.push_back(std::move(b));
  }
  require(!blocks.empty(), Err::ParseError, "empty profile");
  return blocks;
}

void emit(const Json& j, bool as_json, const std::string& text_summary) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_summary << "\n";
}

std::vector<std::vector<Scalar>> elements_from_json(const Field& f, const Json& j) {
  std::vector<std::vector<Scalar>> out;
  require(j.is_array(), Err::ParseError, "elements must be an array of coordinate arrays");
  for (const auto& e : j) out.push_back(io::element_from_json(f, e));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure theory for finite dimensional associative algebras"};
  app.require_subcommand(1);

  std::string input, elements_path, out_path, kind = "matricial", field_arg = "Fp:5";
  std::string ideal_profile = "1", quotient_profile = "1", element_json;
  uint64_t seed = 1;
  uint64_t cx_p = 2;
  int cx_n = 2;
  bool as_json = false, sanity = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit a JSON report");
  };

  auto* analyze = app.add_subcommand("analyze", "radical / Wedderburn / matricial analysis");
  analyze->add_option("--input", input, "algebra JSON file")->required();
  add_common(analyze);

  auto* radical = app.add_subcommand("radical", "Jacobson radical basis");
  radical->add_option("--input", input, "algebra JSON file")->required();
  add_common(radical);

  auto* envelope = app.add_subcommand("envelope", "matricial or f.d.ss envelope of elements");
  envelope->add_option("--kind", kind, "matricial | fdss")->check(CLI::IsMember({"matricial", "fdss"}));
  envelope->add_option("--input", input, "extension JSON file")->required();
  envelope->add_option("--elements", elements_path, "file with coordinate arrays (default: full basis)");
  add_common(envelope);

  auto* split = app.add_subcommand("split", "lift the quotient to a complement T with R = T (+) J");
  split->add_option("--input", input, "extension JSON file")->required();
  add_common(split);

  auto* centralize = app.add_subcommand("centralize", "T-centralizing idempotent capturing Y");
  centralize->add_option("--input", input, "extension JSON file")->required();
  centralize->add_option("--elements", elements_path, "Y as coordinate arrays (default: ideal basis)");
  add_common(centralize);

  auto* cx_cmd = app.add_subcommand("counterexample", "non-perfect-field infeasibility verifier");
  cx_cmd->add_option("--p", cx_p, "characteristic (2, 3 or 5)");
  cx_cmd->add_option("--n", cx_n, "even truncation size, 2..8");
  cx_cmd->add_flag("--sanity", sanity, "run the nu = 0 sanity mode");
  add_common(cx_cmd);

  auto* unitreg = app.add_subcommand("unitregular", "unit-regular witnesses over a matricial algebra");
  unitreg->add_option("--input", input, "algebra JSON file")->required();
  unitreg->add_option("--element", element_json, "coordinate array (default: every basis element)");
  add_common(unitreg);

  auto* verify = app.add_subcommand("verify-extension", "re-verify certificates of an extension file");
  verify->add_option("--input", input, "extension JSON file")->required();
  add_common(verify);

  auto* generate = app.add_subcommand("generate", "seeded random extension instance");
  generate->add_option("--field", field_arg, "Q | Fp:P | FpT:P[:var] | JSON descriptor");
  generate->add_option("--ideal", ideal_profile, "ideal block profile, e.g. '2' or '1+1[1|0|1]'");
  generate->add_option("--quotient", quotient_profile, "quotient block profile");
  generate->add_option("--seed", seed, "64-bit seed");
  generate->add_option("--out", out_path, "write the instance here instead of stdout");
  add_common(generate);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      FDAlgebra a = io::algebra_from_json(read_json_file(input));
      WedderburnReport rep = structure::wedderburn(a);
      Json j = io::wedderburn_to_json(a, rep);
      MatricialResult mr = structure::is_matricial(a);
      j["matricial"] = mr.matricial;
      if (!mr.matricial) j["matricial_reason"] = mr.reason;
      std::ostringstream os;
      os << "dim " << a.dim() << ", radical dim " << rep.radical.dim()
         << (rep.semisimple ? ", semisimple" : ", not semisimple")
         << (mr.matricial ? ", matricial" : ", not matricial") << "\ncomponents:";
      for (const auto& c : rep.components)
        os << " [n=" << c.matrix_size << ",d=" << c.division_dim << "]";
      emit(j, as_json, os.str());
    } else if (*radical) {
      FDAlgebra a = io::algebra_from_json(read_json_file(input));
      auto rad = structure::radical(a);
      Json j;
      j["dim"] = a.dim();
      j["radical_dim"] = rad.dim();
      j["radical"] = io::subspace_to_json(rad);
      emit(j, as_json, "radical dimension " + std::to_string(rad.dim()));
    } else if (*envelope) {
      ExtensionInstance ext = io::extension_from_json(read_json_file(input));
      std::vector<std::vector<Scalar>> xs;
      if (!elements_path.empty()) {
        xs = elements_from_json(ext.q.ambient.field(), read_json_file(elements_path));
      } else {
        for (int i = 0; i < ext.q.ambient.dim(); ++i)
          xs.push_back(ext.q.ambient.basis_element(i));
      }
      Json j;
      if (kind == "matricial") {
        auto [s, units] = extensions::matricial_envelope(ext, xs);
        j["kind"] = "matricial";
        j["envelope_dim"] = s.dim();
        j["envelope"] = io::subspace_to_json(s);
        j["units"] = io::matrix_units_to_json(ext.q.ambient.field(), units);
        emit(j, as_json,
             "matricial envelope of dimension " + std::to_string(s.dim()) + " certified");
      } else {
        auto [s, rep] = extensions::fdss_envelope(ext, xs);
        j["kind"] = "fdss";
        j["envelope_dim"] = s.dim();
        j["envelope"] = io::subspace_to_json(s);
        algcore::Subalgebra ssub = algcore::subalgebra_on(ext.q.ambient, s);
        j["certificate"] = io::wedderburn_to_json(ssub.alg, rep);
        emit(j, as_json, "fdss envelope of dimension " + std::to_string(s.dim()) + " certified");
      }
    } else if (*split) {
      ExtensionInstance ext = io::extension_from_json(read_json_file(input));
      auto full = linalg::subspace_full(ext.q.ambient.field(), ext.q.quotient.dim());
      auto [t, trace] = extensions::lift_subalgebra(ext, full);
      Json j;
      j["t_dim"] = t.dim();
      j["t"] = io::subspace_to_json(t);
      j["f"] = io::element_to_json(ext.q.ambient.field(), trace.f);
      j["w_dim"] = trace.w_ideal.dim();
      emit(j, as_json, "split complement T of dimension " + std::to_string(t.dim()));
    } else if (*centralize) {
      ExtensionInstance ext = io::extension_from_json(read_json_file(input));
      std::vector<std::vector<Scalar>> y;
      if (!elements_path.empty()) {
        y = elements_from_json(ext.q.ambient.field(), read_json_file(elements_path));
      } else {
        for (int i = 0; i < ext.q.ideal.dim(); ++i) y.push_back(ext.q.ideal.basis.row(i));
      }
      auto full = linalg::subspace_full(ext.q.ambient.field(), ext.q.quotient.dim());
      auto [t, ltrace] = extensions::lift_subalgebra(ext, full);
      auto res = extensions::condition_star_check(ext.q.ambient, ext.q.ideal, t, y);
      Json j;
      if (std::holds_alternative<std::vector<Scalar>>(res)) {
        j["found"] = true;
        j["e"] = io::element_to_json(ext.q.ambient.field(),
                                     std::get<std::vector<Scalar>>(res));
        emit(j, as_json, "centralizing idempotent found");
      } else {
        const auto& rep = std::get<FailureReport>(res);
        j["found"] = false;
        j["separable"] = rep.separable;
        j["linear_feasible"] = rep.linear_feasible;
        j["reason"] = rep.reason;
        emit(j, as_json, "no centralizing idempotent: " + rep.reason);
        return 2;
      }
    } else if (*cx_cmd) {
      auto verdict = cx::counterexample_verify(cx_p, cx_n, sanity);
      Json j;
      j["p"] = cx_p;
      j["n"] = cx_n;
      j["sanity_nu_zero"] = sanity;
      j["verdict"] = verdict.feasible ? "Feasible" : "Infeasible";
      j["has_certificate"] = verdict.certificate.has_value();
      emit(j, as_json, std::string("verdict: ") + (verdict.feasible ? "Feasible" : "Infeasible"));
    } else if (*unitreg) {
      FDAlgebra a = io::algebra_from_json(read_json_file(input));
      MatricialResult mr = structure::is_matricial(a);
      require(mr.matricial, Err::NotMatricial, "unitregular needs a matricial algebra");
      std::vector<std::vector<Scalar>> targets;
      if (!element_json.empty())
        targets.push_back(io::element_from_json(a.field(), Json::parse(element_json)));
      else
        for (int i = 0; i < a.dim(); ++i) targets.push_back(a.basis_element(i));
      Json arr = Json::array();
      for (const auto& x : targets) {
        auto wit = regtools::unit_regular_witness(a, x, &*mr.units);
        Json w;
        w["x"] = io::element_to_json(a.field(), wit.x);
        w["y"] = io::element_to_json(a.field(), wit.y);
        w["u"] = io::element_to_json(a.field(), *wit.unit);
        w["u_inv"] = io::element_to_json(a.field(), *wit.unit_inv);
        arr.push_back(std::move(w));
      }
      Json j;
      j["witnesses"] = std::move(arr);
      emit(j, as_json, std::to_string(targets.size()) + " unit-regular witnesses verified");
    } else if (*verify) {
      ExtensionInstance ext = io::extension_from_json(read_json_file(input));
      Json j;
      j["ideal_class"] = alg_class_name(ext.ideal_class);
      j["quotient_class"] = alg_class_name(ext.quotient_class);
      bool ok = true;
      auto check_class = [&](const FDAlgebra& alg, AlgClass c, const std::string& key) {
        bool good = true;
        switch (c) {
          case AlgClass::Matricial:
            good = structure::is_matricial(alg).matricial;
            break;
          case AlgClass::Fdss:
            good = structure::radical(alg).dim() == 0;
            break;
          default:
            break;
        }
        j[key] = good;
        ok = ok && good;
      };
      if (ext.q.ideal.dim() > 0) {
        algcore::Subalgebra jsub = algcore::subalgebra_on(ext.q.ambient, ext.q.ideal);
        check_class(jsub.alg, ext.ideal_class, "ideal_verified");
      } else {
        j["ideal_verified"] = true;
      }
      check_class(ext.q.quotient, ext.quotient_class, "quotient_verified");
      // pi multiplicative on all basis pairs
      bool pi_ok = true;
      const FDAlgebra& r = ext.q.ambient;
      for (int i = 0; i < r.dim() && pi_ok; ++i)
        for (int jj = 0; jj < r.dim() && pi_ok; ++jj) {
          auto lhs = ext.q.project(r.mul(r.basis_element(i), r.basis_element(jj)));
          auto rhs = ext.q.quotient.mul(ext.q.project(r.basis_element(i)),
                                        ext.q.project(r.basis_element(jj)));
          pi_ok = ext.q.quotient.eq(lhs, rhs);
        }
      j["projection_multiplicative"] = pi_ok;
      ok = ok && pi_ok;
      j["valid"] = ok;
      emit(j, as_json, ok ? "extension certificates verified" : "extension certificates INVALID");
      if (!ok) return 2;
    } else if (*generate) {
      FieldRef f = make_field(parse_field_arg(field_arg));
      ExtensionProfile prof;
      prof.ideal_blocks = parse_profile(ideal_profile);
      prof.quotient_blocks = parse_profile(quotient_profile);
      auto g = gen::generate_random_extension(seed, f, prof);
      Json j = io::extension_to_json(g.inst);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        require(out.good(), Err::ParseError, "cannot write " + out_path);
        out << j.dump(2) << "\n";
        emit(Json{{"written", out_path}}, as_json, "instance written to " + out_path);
      } else {
        std::cout << j.dump(2) << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
