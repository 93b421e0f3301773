#include "coxds/json_io.hpp"

namespace coxds::io {

json dump(const Rational& q) { return rat_str(q); }

json dump(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [power, value] : p.coeffs)
    out.push_back({{"power", power}, {"value", rat_str(value)}});
  return out;
}

json dump(const LaurentMatrix& m) {
  json entries = json::array();
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      entries.push_back({{"row", i}, {"col", j}, {"poly", dump(m.at(i, j))}});
    }
  return {{"n", m.n}, {"entries", entries}};
}

json dump(const ConstMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.rank_size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.rank_size(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json dump(const Partition& p) { return p.parts; }

json dump(const OrbitType& o) {
  json blocks = json::array();
  for (const auto& b : o.blocks)
    blocks.push_back({{"eigenvalue", rat_str(b.eigenvalue)},
                      {"partition", dump(b.partition)}});
  return {{"blocks", blocks}};
}

json dump(const CoxeterFormalType& ft) {
  json coeffs = json::array();
  for (const auto& c : ft.coeffs) coeffs.push_back(rat_str(c));
  return {{"n", ft.n}, {"r", ft.r}, {"coeffs", coeffs}};
}

json dump(const NormalForm& nf, int r) {
  json c = json::array();
  for (int s = r - 1; s >= 0; --s) c.push_back(rat_str(nf.c[s]));
  return {{"a", rat_str(nf.a)}, {"c", c}};
}

json dump(const GaugeElement& g) {
  json factors = json::array();
  for (const auto& f : g.factors) {
    json gamma = json::array();
    for (const auto& v : f.gamma) gamma.push_back(rat_str(v));
    factors.push_back({{"s", f.s}, {"gamma", gamma}});
  }
  return {{"factors", factors}, {"trunc", g.trunc}};
}

json dump(const Witness& w) {
  return {{"alpha", dump(w.alpha)}, {"Y", dump(w.y)}};
}

json dump(const RigidityReport& rep) {
  return {{"n", rep.n},
          {"r", rep.r},
          {"orbit", dump(rep.orbit)},
          {"irr", rep.irr},
          {"dim_orbit", rep.dim_orbit},
          {"n_nabla", rep.n_nabla},
          {"rigid", rep.rigid},
          {"divisibility", rep.divisibility},
          {"is_generator", rep.is_generator}};
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return rat_parse(j.get<std::string>());
}

LaurentPoly parse_laurent_poly(const json& j) {
  LaurentPoly p;
  for (const auto& term : j)
    p.add(term.at("power").get<long>(), parse_rational(term.at("value")));
  return p;
}

LaurentMatrix parse_laurent_matrix(const json& j) {
  LaurentMatrix m(j.at("n").get<int>());
  for (const auto& e : j.at("entries")) {
    int row = e.at("row").get<int>(), col = e.at("col").get<int>();
    if (row < 1 || row > m.n || col < 1 || col > m.n)
      throw std::invalid_argument("matrix entry index out of range");
    m.at(row, col) += parse_laurent_poly(e.at("poly"));
  }
  return m;
}

ConstMatrix parse_const_matrix(const json& j) {
  int n = static_cast<int>(j.size());
  ConstMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = j.at(i - 1);
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("constant matrix must be square");
    for (int jj = 1; jj <= n; ++jj) m.at(i, jj) = parse_rational(row.at(jj - 1));
  }
  return m;
}

Partition parse_partition(const json& j) {
  return Partition(j.get<std::vector<int>>());
}

OrbitType parse_orbit(const json& j) {
  std::vector<OrbitBlock> blocks;
  for (const auto& b : j.at("blocks"))
    blocks.push_back({parse_rational(b.at("eigenvalue")),
                      parse_partition(b.at("partition"))});
  return OrbitType(std::move(blocks));
}

CoxeterFormalType parse_formal_type(const json& j) {
  CoxeterFormalType ft;
  ft.n = j.at("n").get<int>();
  ft.r = j.at("r").get<int>();
  for (const auto& c : j.at("coeffs")) ft.coeffs.push_back(parse_rational(c));
  ft.validate();
  return ft;
}

DSInstance parse_instance(const json& j) {
  DSInstance inst{parse_formal_type(j.at("formal_type")), parse_orbit(j.at("orbit"))};
  inst.validate();
  return inst;
}

Witness parse_witness(const json& j) {
  return {parse_laurent_matrix(j.at("alpha")), parse_const_matrix(j.at("Y"))};
}

CharData parse_char_data(const json& j) {
  std::vector<std::pair<Rational, int>> q;
  for (const auto& b : j)
    q.emplace_back(parse_rational(b.at("eigenvalue")),
                   b.at("multiplicity").get<int>());
  return make_char_data(std::move(q));
}

}  // namespace coxds::io
