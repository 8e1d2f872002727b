#include "nhk/serialize.hpp"

#include <stdexcept>

namespace nhk {

namespace {

Json matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const Json& j, int expected) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected)
    throw std::invalid_argument("bad matrix: expected " + std::to_string(expected) +
                                " rows");
  IntMat m(expected);
  for (int i = 0; i < expected; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != expected)
      throw std::invalid_argument("bad matrix row " + std::to_string(i));
    for (int k = 0; k < expected; ++k) m.at(i, k) = j[i][k].get<long long>();
  }
  return m;
}

std::vector<long long> vec_from_json(const Json& j, int expected) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected)
    throw std::invalid_argument("bad coordinate vector: expected length " +
                                std::to_string(expected));
  std::vector<long long> v(expected);
  for (int i = 0; i < expected; ++i) v[i] = j[i].get<long long>();
  return v;
}

}  // namespace

Json to_json(const RootDatum& d) {
  Json j;
  j["type"] = d.label();
  j["rank"] = d.rank();
  j["cartan"] = matrix_to_json(d.cartan());
  Json roots = Json::array();
  for (const auto& r : d.positive_roots()) {
    Json e;
    e["root"] = r.root_coords;
    e["weight"] = r.wt.c;
    e["coroot"] = r.cv.c;
    roots.push_back(std::move(e));
  }
  j["positive_roots"] = std::move(roots);
  j["highest_root"] = d.highest_root().root_coords;
  j["highest_coroot"] = d.highest_root().cv.c;
  j["fundamental_group_order"] = d.fundamental_group_order();
  j["weyl_order"] = d.weyl_order();
  j["convention"] = d.coordinate_convention();
  return j;
}

Json to_json(const ExtAffine& w) {
  Json j;
  j["t"] = w.translation_part();
  j["w"] = matrix_to_json(w.finite_matrix());
  return j;
}

ExtAffine ext_affine_from_json(const RootDatum& d, const Json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("w"))
    throw std::invalid_argument("group element needs fields \"t\" and \"w\"");
  return ExtAffine(d, vec_from_json(j["t"], d.rank()),
                   matrix_from_json(j["w"], d.rank()));
}

Json to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t = Json::array();
    t.push_back(m.e);
    t.push_back(rational_str(c));
    terms.push_back(std::move(t));
  }
  return terms;
}

SparsePoly poly_from_json(int nvars, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  SparsePoly p(nvars);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2)
      throw std::invalid_argument("polynomial term must be [[exponents], coeff]");
    const Json& ej = t[0];
    if (!ej.is_array() || static_cast<int>(ej.size()) != nvars)
      throw std::invalid_argument("exponent vector must have length " +
                                  std::to_string(nvars));
    Monomial m{std::vector<int>(nvars)};
    for (int i = 0; i < nvars; ++i) m.e[i] = ej[i].get<int>();
    p.add_term(std::move(m), rational_parse(t[1].is_string()
                                                ? t[1].get<std::string>()
                                                : t[1].dump()));
  }
  return p;
}

Json to_json(const EvalContext& ctx, const RootFraction& f) {
  Json j;
  j["num"] = to_json(f.num());
  Json den = Json::array();
  for (const auto& [form, mult] : f.den())
    for (int i = 0; i < mult; ++i) {
      Json entry = Json::array();
      entry.push_back(form.coroot);
      if (form.hk.get_den() == 1)
        entry.push_back(static_cast<long long>(form.hk.get_num().get_si()));
      else
        entry.push_back(rational_str(form.hk));
      den.push_back(std::move(entry));
    }
  j["den"] = std::move(den);
  return j;
}

RootFraction fraction_from_json(const EvalContext& ctx, const Json& j) {
  if (!j.is_object() || !j.contains("num"))
    throw std::invalid_argument("fraction needs field \"num\"");
  SparsePoly num = poly_from_json(ctx.nvars(), j["num"]);
  std::map<AffineForm, int> den;
  if (j.contains("den")) {
    if (!j["den"].is_array())
      throw std::invalid_argument("\"den\" must be an array");
    for (const auto& entry : j["den"]) {
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument("denominator entry must be [[coroot], k]");
      std::vector<long long> v = vec_from_json(entry[0], ctx.rank());
      Rational k = entry[1].is_string() ? rational_parse(entry[1].get<std::string>())
                                        : rat(entry[1].get<long long>());
      // k counts h units; in a generic context the stored value is the h
      // coefficient, in a specialized one the scalar k * c.
      auto [form, scale] = AffineForm::normalized(std::move(v), k * ctx.hbar_unit());
      den[form] += 1;
      num = num * (Rational(1) / scale);
    }
  }
  return RootFraction(ctx, std::move(num), std::move(den));
}

Json to_json(const SkewElement& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json t;
    t["group"] = to_json(w);
    t["coeff"] = to_json(e.ctx(), c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

SkewElement skew_from_json(const EvalContext& ctx, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("skew element needs an array field \"terms\"");
  SkewElement e(ctx);
  for (const auto& t : j["terms"]) {
    if (!t.contains("group") || !t.contains("coeff"))
      throw std::invalid_argument("skew term needs \"group\" and \"coeff\"");
    e.add_term(ext_affine_from_json(*ctx.datum, t["group"]),
               fraction_from_json(ctx, t["coeff"]));
  }
  return e;
}

Json to_json(const NilHeckeElement& u) {
  Json terms = Json::array();
  for (const auto& [w, f] : u.terms()) {
    Json t;
    t["index"] = to_json(w);
    t["coeff"] = to_json(f);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

NilHeckeElement nilhecke_from_json(const EvalContext& ctx, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("normal form needs an array field \"terms\"");
  NilHeckeElement u(ctx);
  for (const auto& t : j["terms"]) {
    if (!t.contains("index") || !t.contains("coeff"))
      throw std::invalid_argument("normal-form term needs \"index\" and \"coeff\"");
    u.add_term(ext_affine_from_json(*ctx.datum, t["index"]),
               poly_from_json(ctx.nvars(), t["coeff"]));
  }
  return u;
}

Json to_json(const EvalContext& ctx, const MembershipWitness& w) {
  Json j;
  j["index"] = to_json(w.index);
  j["coeff"] = to_json(ctx, w.coeff);
  return j;
}

}  // namespace nhk
