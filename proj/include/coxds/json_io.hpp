#pragma once

#include <nlohmann/json.hpp>

#include "coxds/ds.hpp"
#include "coxds/rigidity.hpp"

namespace coxds::io {

using nlohmann::json;

// All numbers cross the interface as exact "p/q" strings.

json dump(const Rational& q);
json dump(const LaurentPoly& p);     // [{power, value}]
json dump(const LaurentMatrix& m);   // {n, entries: [{row, col, poly}]}
json dump(const ConstMatrix& m);     // dense n x n array of "p/q"
json dump(const Partition& p);       // nonincreasing int array
json dump(const OrbitType& o);       // {blocks: [{eigenvalue, partition}]}
json dump(const CoxeterFormalType& ft);
json dump(const NormalForm& nf, int r);  // c listed from index r-1 down to 0
json dump(const GaugeElement& g);        // ordered factor list
json dump(const Witness& w);
json dump(const RigidityReport& rep);

Rational parse_rational(const json& j);
LaurentPoly parse_laurent_poly(const json& j);
LaurentMatrix parse_laurent_matrix(const json& j);
ConstMatrix parse_const_matrix(const json& j);
Partition parse_partition(const json& j);
OrbitType parse_orbit(const json& j);
CoxeterFormalType parse_formal_type(const json& j);
DSInstance parse_instance(const json& j);
Witness parse_witness(const json& j);
CharData parse_char_data(const json& j);  // [{eigenvalue, multiplicity}]

}  // namespace coxds::io
