#ifndef SVLAB_REPORT_HPP
#define SVLAB_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "svlab/nevanlinna.hpp"
#include "svlab/nochka.hpp"
#include "svlab/smt.hpp"
#include "svlab/uniqueness.hpp"
#include "svlab/variety.hpp"

namespace svlab {

/**
 * JSON forms of the report types.  Keys come out sorted (nlohmann objects
 * are map-backed), rationals are canonical "p/q" strings, and doubles are
 * rendered through fmt_double, so equal reports serialize to identical
 * bytes.
 */
nlohmann::json json_of(const CheckRecord& r);
nlohmann::json json_of(const PositionReport& r);
nlohmann::json json_of(const WeightCertificate& c);
nlohmann::json json_of(const BasisCompletion& c);
nlohmann::json json_of(const ClaimLedger& l);
nlohmann::json json_of(const SMTReport& r);
nlohmann::json json_of(const UniquenessReport& r);
nlohmann::json json_of(const Ineq52Report& r);
nlohmann::json json_of(const std::vector<JensenRow>& rows);

/// RFC 4180 field quoting (applied only when the field needs it).
std::string csv_escape(const std::string& field);

std::string slope_csv(const SMTReport& r);
std::string numeric_csv(const SMTReport& r);
std::string claim_csv(const ClaimLedger& l);
std::string jensen_csv(const std::vector<JensenRow>& rows);
std::string ineq52_csv(const Ineq52Report& r);

/// Write via a temp file in the same directory plus rename, so readers
/// never observe a partial file.  Throws ConfigError on IO failure.
void atomic_write(const std::string& path, const std::string& content);

} // namespace svlab

#endif
