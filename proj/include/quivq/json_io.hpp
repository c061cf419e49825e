#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "quivq/mckay.hpp"
#include "quivq/ncalg.hpp"
#include "quivq/params.hpp"
#include "quivq/quiver.hpp"
#include "quivq/typea.hpp"

namespace quivq::json_io {

using json = nlohmann::json;

/// Input that does not match the expected schema. The CLI reports it with exit status 1.
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json to_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from(const json& j);
std::vector<Rational> rationals_from(const json& j);
json to_json(const std::vector<Rational>& v);

/// Rational values as strings, others as {"conductor": m, "coeffs": [...]}.
json to_json(const CycScalar& z);
CycScalar cyc_from(const json& j);
json to_json(const std::vector<CycScalar>& v);

json to_json(const MatQ& m);
json to_json(const MatC& m);
/// Array of rows; an empty array with explicit shape needs rows/cols.
MatQ matq_from(const json& j, std::size_t rows, std::size_t cols);

DimVec dims_from(const json& j);

/// {"vertices": n, "arrows": [[t, h], ...]} plus "framing" when given.
json to_json(const Quiver& q, const DimVec* framing = nullptr);
Quiver quiver_from(const json& j);
/// Framing defaults to zero.
FramedQuiver framed_from(const json& j);

/// {"quiver", "v", "w", "A", "B", "Gamma", "Delta"}.
json to_json(const RepQ& r);
RepQ rep_from(const json& j);

json to_json(const TypeAData& t);
TypeAData typea_from(const json& j);
/// Full A~, B~ matrices and every nonempty named block with its role and degree.
json to_json(const BlockRepQ& x);
BlockRepQ blockrep_from(const json& j, const TypeAData& t);

json to_json(const ParamMap& p);
json to_json(const KleinianGroup& g, const McKayQuiver& mq);
json to_json(const AlgebraCtx& ctx, const NCElement& x);

json error_json(const std::string& code, const std::string& detail);

/// j[key] or MalformedInput naming the key.
const json& require(const json& j, const std::string& key);

}  // namespace quivq::json_io
