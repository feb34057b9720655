#include "picard/serialization.hpp"

#include <sstream>

#include "picard/errors.hpp"

namespace picard {

namespace {

bool fits_53_bits(const mpz_class& x) { return mpz_sizeinbase(x.get_mpz_t(), 2) <= 53; }

}  // namespace

json int_to_json(const mpz_class& x) {
  if (fits_53_bits(x)) return json(x.get_si());
  return json(x.get_str());
}

mpz_class int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()), 10);
    return mpz_class(std::to_string(j.get<long long>()), 10);
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::string body = s;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.erase(0, 1);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("not a decimal integer: \"" + s + "\"");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
  }
  throw FormatError("expected an integer, got " + j.dump());
}

json to_json(const EisensteinInt& x) { return json::array({int_to_json(x.a), int_to_json(x.b)}); }

EisensteinInt eisenstein_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected [a, b] for an Eisenstein integer, got " + j.dump());
  return {int_from_json(j[0]), int_from_json(j[1])};
}

json to_json(const EisensteinFrac& z) { return json{{"num", to_json(z.num())}, {"den", int_to_json(z.den())}}; }

EisensteinFrac frac_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw FormatError("expected {\"num\": [a,b], \"den\": d}");
  const mpz_class den = int_from_json(j.at("den"));
  if (sgn(den) <= 0) throw FormatError("fraction denominator must be positive");
  return EisensteinFrac(eisenstein_from_json(j.at("num")), den);
}

json to_json(const Matrix4& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(std::move(r));
  }
  return json{{"matrix", std::move(rows)}};
}

json to_json(const GroupMatrix& g) { return to_json(g.matrix()); }

Matrix4 matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw FormatError("expected an object with a \"matrix\" key");
  const json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 4) throw FormatError("\"matrix\" must have 4 rows");
  Matrix4 m;
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4) throw FormatError("row " + std::to_string(i + 1) + " must have 4 entries");
    for (int k = 0; k < 4; ++k) m[i][k] = eisenstein_from_json(rows[i][k]);
  }
  return m;
}

GroupMatrix group_matrix_from_json(const json& j) { return GroupMatrix(matrix_from_json(j)); }

json to_json(const Matrix2& m) {
  return json::array({json::array({to_json(m[0][0]), to_json(m[0][1])}), json::array({to_json(m[1][0]), to_json(m[1][1])})});
}

std::string serialize(const UWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << (w[i].gen == UGen::U1 ? "U1" : "U2");
    if (w[i].exp != 1) os << '^' << w[i].exp;
  }
  return os.str();
}

json to_json(const UWord& w) { return serialize(w); }

json to_json(const DecompositionResult& r) {
  return json{{"unit", to_json(r.lambda.value())}, {"word", serialize(r.word)}};
}

DecompositionResult result_from_json(const json& j) {
  if (!j.is_object() || !j.contains("unit") || !j.contains("word") || !j.at("word").is_string())
    throw FormatError("expected {\"unit\": [a,b], \"word\": \"...\"}");
  EisensteinInt u = eisenstein_from_json(j.at("unit"));
  if (!Unit::is_unit(u)) throw FormatError("\"unit\" " + to_string(u) + " is not a unit of Z[w]");
  return {Unit(u), parse_word(j.at("word").get<std::string>())};
}

json to_json(const ReductionStep& s) {
  return json{{"tau", json::array({to_json(s.tau[0]), to_json(s.tau[1])})},
              {"k", int_to_json(s.k)},
              {"n_before", int_to_json(s.n_before)},
              {"n_after", int_to_json(s.n_after)}};
}

json to_json(const HeisenbergParam& p) {
  return json{{"unit", to_json(p.lambda.value())},
              {"tau", json::array({to_json(p.tau[0]), to_json(p.tau[1])})},
              {"k", int_to_json(p.k)},
              {"u", to_json(p.u.matrix())}};
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return json{{"steps", std::move(steps)}, {"stabilizer", to_json(t.stabilizer)}};
}

json u2_table_json() {
  json rows = json::array();
  for (const auto& [u, w] : u_word_table()) rows.push_back(json{{"element", to_json(u.matrix())}, {"word", serialize(w)}});
  return rows;
}

}  // namespace picard
