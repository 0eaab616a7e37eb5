#ifndef GRAMCAL_REPORT_HPP
#define GRAMCAL_REPORT_HPP

#include <json.hpp>

#include "gramcal/indicator.hpp"
#include "gramcal/verify.hpp"

namespace gramcal {

// Machine-readable report encoding: every scalar is a canonical string,
// a half-space is the array ["u1", ..., "ud", "mu"].
nlohmann::json halfspace_to_json(const AffineForm& f);
AffineForm halfspace_from_json(const nlohmann::json& j);

nlohmann::json term_to_json(const FormalTerm& term);
FormalTerm term_from_json(const nlohmann::json& j, int dim);

nlohmann::json terms_to_json(const FormalSum& sum);
FormalSum sum_from_json(const nlohmann::json& terms, int dim);

nlohmann::json verdict_to_json(const Verdict& verdict);

}  // namespace gramcal

#endif
