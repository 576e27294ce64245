#include "tgl/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tgl {

namespace {

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::runtime_error(std::string("missing field \"") + key + "\"");
  return *it;
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer())
    throw std::runtime_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Int json_to_int(const Json& v) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    Int r;
    if (mpz_set_str(r.get_mpz_t(), v.get<std::string>().c_str(), 10) != 0)
      throw std::runtime_error("matrix entry is not a decimal integer: " + v.dump());
    return r;
  }
  throw std::runtime_error("matrix entry must be an integer or a decimal string");
}

Json int_or_string(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json tri_state(const std::optional<bool>& v) { return v ? Json(*v) : Json("n/a"); }

}  // namespace

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) throw std::runtime_error("matroid description must be a JSON object");
  const Json& tv = require(j, "type");
  if (!tv.is_string()) throw std::runtime_error("field \"type\" must be a string");
  std::string type = tv.get<std::string>();

  if (type == "graphic") {
    int vertices = require_int(j, "vertices");
    const Json& ej = require(j, "edges");
    if (!ej.is_array()) throw std::runtime_error("field \"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : ej) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw std::runtime_error("each edge must be a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Matroid::graphic(vertices, std::move(edges));
  }
  if (type == "uniform") {
    return Matroid::uniform(require_int(j, "rank"), require_int(j, "size"));
  }
  if (type == "linear") {
    const Json& mj = require(j, "matrix");
    if (!mj.is_array() || mj.empty())
      throw std::runtime_error("field \"matrix\" must be a non-empty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const Json& rj : mj) {
      if (!rj.is_array()) throw std::runtime_error("each matrix row must be an array");
      std::vector<Int> row;
      for (const Json& v : rj) row.push_back(json_to_int(v));
      rows.push_back(std::move(row));
    }
    return Matroid::linear(std::move(rows));
  }
  if (type == "bases") {
    int size = require_int(j, "size");
    const Json& bj = require(j, "bases");
    if (!bj.is_array()) throw std::runtime_error("field \"bases\" must be an array");
    std::vector<Mask> bases;
    for (const Json& b : bj) {
      if (!b.is_array()) throw std::runtime_error("each basis must be an array of element indices");
      Mask mask = 0;
      for (const Json& v : b) {
        if (!v.is_number_integer())
          throw std::runtime_error("basis elements must be integers");
        int e = v.get<int>();
        if (e < 0 || e >= size)
          throw std::runtime_error("basis element out of range: " + std::to_string(e));
        Mask bit = Mask{1} << e;
        if (mask & bit)
          throw std::runtime_error("repeated element in a basis: " + std::to_string(e));
        mask |= bit;
      }
      bases.push_back(mask);
    }
    return Matroid::explicit_bases(size, std::move(bases));
  }
  throw std::runtime_error("unknown matroid type \"" + type + "\"");
}

Matroid load_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Json j = Json::parse(in);
  return matroid_from_json(j);
}

Json zhat_to_json(const ZHat& z) {
  const RankProfile& pr = z.profile;
  int n = pr.ground_size;
  std::vector<std::pair<int, Mask>> order;
  order.reserve(pr.exponent.size());
  for (Mask a = 0; a < static_cast<Mask>(pr.exponent.size()); ++a)
    order.emplace_back(pr.exponent[a], a);
  std::sort(order.begin(), order.end());
  Json terms = Json::array();
  for (auto [q, mask] : order) {
    Json vars = Json::array();
    for (int e = 0; e < n; ++e)
      if (mask & (Mask{1} << e)) vars.push_back(e);
    terms.push_back(Json{{"q", q}, {"vars", std::move(vars)}, {"coeff", 1}});
  }
  return Json{{"ground_size", n}, {"rank", pr.rank}, {"terms", std::move(terms)}};
}

Json bipoly_to_json(const BiPolyZ& t) {
  int dy = t.degree_y();
  Json rows = Json::array();
  for (int dx = 0; dx <= t.degree_x(); ++dx) {
    Json row = Json::array();
    for (int y = 0; y <= dy; ++y) row.push_back(int_or_string(t.coeff(dx, y)));
    rows.push_back(std::move(row));
  }
  return Json{{"degree_x", t.degree_x()}, {"degree_y", dy}, {"coeffs", std::move(rows)}};
}

Json certificate_to_json(const SnCertificate& c) {
  Json out = Json::object();
  auto witness = [](const DegreePattern& w) {
    return Json::array({w.field_order, w.parts});
  };
  if (c.transitive) out["transitive"] = witness(*c.transitive);
  if (c.transposition) out["transposition"] = witness(*c.transposition);
  if (c.prime_cycle)
    out["prime_cycle"] =
        Json::array({c.prime_cycle->field_order, c.prime_cycle->parts, c.prime_cycle_length});
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["input"] = r.input;
  j["n"] = r.n;
  j["rank"] = r.rank;
  if (r.assignment) j["assignment"] = *r.assignment;
  if (r.y0_used) j["y0"] = *r.y0_used;
  if (r.characteristic) j["characteristic"] = *r.characteristic;
  if (r.samples_used) j["samples_used"] = *r.samples_used;
  j["irreducible_witness_prime"] =
      r.irreducible_witness_prime ? Json(*r.irreducible_witness_prime) : Json(nullptr);
  if (r.inconclusive_bound) j["bound"] = *r.inconclusive_bound;
  j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : Json(nullptr);
  j["status"] = r.status;
  return j;
}

Json identity_report_to_json(const IdentityReport& r) {
  Json j;
  j["input"] = r.input;
  j["strategies_agree"] = r.strategies_agree;
  j["deletion_contraction"] = tri_state(r.deletion_contraction);
  j["loop_coloop"] = tri_state(r.loop_coloop);
  j["q_one_product"] = r.q_one_product;
  j["bivariate_substitution"] = r.bivariate_substitution;
  j["direct_sum_product"] = tri_state(r.direct_sum_product);
  j["circuit_forms"] = tri_state(r.circuit_forms);
  j["all_pass"] = r.all_pass();
  return j;
}

Json jacobian_report_to_json(const JacobianReport& r) {
  Json j;
  j["input"] = r.input;
  j["rank"] = r.rank;
  j["points"] = r.points;
  j["ranks"] = r.ranks;
  j["status"] = r.status;
  return j;
}

}  // namespace tgl
