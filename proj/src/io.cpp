#include "uspecht/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace uspecht {

json Provenance::to_json() const {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"config", config},
              {"seed", seed}};
}

namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());  // decimal string when out of int64 range
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

}  // namespace

json cyc_to_json(const Cyc& c) {
  json num = json::array();
  for (auto& z : c.num()) num.push_back(mpz_to_json(z));
  return json{{"den", mpz_to_json(c.den())}, {"num", num}};
}

Cyc cyc_from_json(const json& j, int p) {
  mpz_class den = mpz_from_json(j.at("den"));
  Cyc out = Cyc::zero(p);
  const auto& num = j.at("num");
  if (static_cast<int>(num.size()) != p - 1)
    throw std::invalid_argument("cyc_from_json: wrong numerator length");
  for (int i = 0; i < p - 1; ++i) {
    Cyc term = Cyc::zeta_pow(p, i);
    term.scale(mpq_class(mpz_from_json(num[i]), den));
    out += term;
  }
  return out;
}

json matrix_to_json(const NormalMatrix& L) {
  json entries = json::object();
  for (auto& [b, j] : jt_positions(L.n, L.row2)) {
    uint8_t v = L.at(b, j);
    if (v) entries["(" + std::to_string(b) + "," + std::to_string(j) + ")"] = v;
  }
  return json{{"row_labels", L.row2}, {"entries", entries}};
}

NormalMatrix matrix_from_json(const json& j, int n) {
  NormalMatrix L(n, j.at("row_labels").get<std::vector<int>>());
  for (auto& [key, val] : j.at("entries").items()) {
    int b = 0, c = 0;
    if (std::sscanf(key.c_str(), "(%d,%d)", &b, &c) != 2)
      throw std::invalid_argument("matrix_from_json: bad entry key " + key);
    L.set(b, c, static_cast<uint8_t>(val.get<int>()));
  }
  return L;
}

json module_vector_to_json(const ModuleVector& v, const Gf& gf) {
  json terms = json::array();
  for (auto& [k, c] : v.terms) {
    terms.push_back(json{{"matrix", matrix_to_json(matrix_of_key(v.n, k, gf))},
                         {"coeff", cyc_to_json(c)}});
  }
  return json{{"basis", v.basis == BasisTag::Matrix ? "matrix" : "idempotent"},
              {"terms", terms}};
}

json field_to_json(const Gf& gf) {
  json j{{"q", gf.q()}, {"p", gf.p()}, {"k", gf.k()}};
  if (gf.k() > 1) j["modulus"] = gf.modulus();
  return j;
}

json tableau_to_json(const Tableau& t) {
  return json{{"n", t.n}, {"m", t.m}, {"row2", t.row2}};
}

json shifted_tableau_to_json(const ShiftedTableau& st) {
  Tableau r = st.renumbered();
  return json{{"n", r.n}, {"m", r.m}, {"row2", st.row2}, {"alphabet", st.alphabet}};
}

json pattern_to_json(const Pattern& p) {
  json pos = json::array();
  for (auto& [b, a] : p.pos) pos.push_back(json::array({b, a}));
  return pos;
}

json filled_pattern_to_json(const FilledPattern& pf) {
  json pos = json::array();
  for (size_t i = 0; i < pf.values.size(); ++i)
    pos.push_back(json::array(
        {pf.p.pos[i].first, pf.p.pos[i].second, static_cast<int>(pf.values[i])}));
  return pos;
}

json specht_vector_to_json(const SpechtVector& sv, const Gf& gf) {
  return json{{"leading_label", matrix_to_json(matrix_of_key(sv.v.n, sv.top_label, gf))},
              {"last_tableau", tableau_to_json(sv.last)},
              {"filled_pattern", filled_pattern_to_json(sv.pf)},
              {"vector", module_vector_to_json(sv.v, gf)}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << content;
    if (!f.good()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for " + path);
}

}  // namespace uspecht
