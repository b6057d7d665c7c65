#include "json_util.hpp"
#include "kirby4/json.hpp"

namespace kirby4 {

using detail::Json;

namespace {

Json matrix_object(const SymIntMatrix& v) {
  Json j;
  j["n"] = v.size();
  j["entries"] = detail::matrix_to_json(v.matrix());
  return j;
}

Json form_class_object(const FormClass& f) {
  Json j;
  j["rank"] = f.rank;
  j["signature"] = f.signature;
  j["parity"] = parity_name(f.parity);
  j["definiteness"] = definiteness_name(f.definiteness);
  return j;
}

Json invariants_object(const ManifoldInvariants& m) {
  Json j;
  j["form"] = matrix_object(m.form);
  j["form_class"] = form_class_object(m.form_class);
  j["signature"] = m.signature;
  j["characteristic"] = detail::vector_to_json(m.characteristic);
  j["characteristic_square"] = detail::integer_to_json(m.characteristic_square);
  j["ks"] = m.ks;
  j["arf"] = m.arf ? Json(*m.arf) : Json(nullptr);
  j["knot_determinant"] = m.knot_determinant ? detail::integer_to_json(*m.knot_determinant) : Json(nullptr);
  j["knot_crossings"] = m.knot_crossings;
  j["smooth_assumed"] = m.smooth_assumed;
  return j;
}

Json witness(const std::optional<IntMatrix>& a) {
  return a ? detail::matrix_to_json(*a) : Json(nullptr);
}

}  // namespace

SymIntMatrix parse_matrix(std::string_view text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "matrix file must be a JSON object");
  const auto rows_it = doc.find("entries");
  if (rows_it == doc.end() || !rows_it->is_array()) {
    throw Error(ErrorCode::MalformedInput, "\"entries\" must be an array of rows");
  }
  const std::size_t n = rows_it->size();
  if (const auto it = doc.find("n"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0 || it->get<std::size_t>() != n) {
      throw Error(ErrorCode::MalformedInput, "\"n\" does not match the number of rows");
    }
  }
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = (*rows_it)[i];
    if (!row.is_array() || row.size() != n) throw Error(ErrorCode::MalformedInput, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = detail::integer_from_json(row[j], "matrix entry");
  }
  return SymIntMatrix(std::move(m));
}

std::string to_json(const SymIntMatrix& v) { return matrix_object(v).dump(); }
std::string to_json(const FormClass& f) { return form_class_object(f).dump(); }
std::string to_json(const ManifoldInvariants& m) { return invariants_object(m).dump(); }

std::string to_json(const Verdict& v) {
  Json j;
  j["homeomorphic"] = v.homeomorphic;
  j["oriented"] = v.oriented;
  j["smooth"] = v.smooth;
  j["reason"] = reason_name(v.reason);
  j["left"] = invariants_object(v.left);
  j["right"] = invariants_object(v.right);
  j["witness"] = witness(v.congruence_witness);
  return j.dump();
}

std::string characteristic_json(const IntVector& c) {
  Json j;
  j["n"] = c.size();
  j["characteristic"] = detail::vector_to_json(c);
  return j.dump();
}

std::string congruence_json(const CongruenceResult& r, const FormClass& left, const FormClass& right) {
  Json j;
  j["congruent"] = r.congruent;
  j["left"] = form_class_object(left);
  j["right"] = form_class_object(right);
  j["witness"] = witness(r.witness);
  return j.dump();
}

std::string knot_json(const KnotDiagram& k) {
  const IntPolynomial delta = alexander_polynomial(k);
  Json coefficients = Json::array();
  if (!delta.is_zero())
    for (long e = 0; e <= delta.max_exponent(); ++e) coefficients.push_back(detail::integer_to_json(delta.coefficient(e)));
  Json j;
  j["alexander"] = std::move(coefficients);
  j["determinant"] = detail::integer_to_json(alexander_at_minus_one(k));
  j["arf"] = arf_invariant(k);
  j["crossings"] = k.crossing_count();
  return j.dump();
}

}  // namespace kirby4
