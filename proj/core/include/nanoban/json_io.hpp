// Canonical JSON for series and tables: variable specs followed by a
// lexicographically sorted term list, integers as strings. Byte-identical
// across runs.

#ifndef NANOBAN_JSON_IO_HPP
#define NANOBAN_JSON_IO_HPP

#include <string>

#include "nanoban/coeff_table.hpp"
#include "nanoban/gwgv.hpp"
#include "nanoban/qforms.hpp"
#include "nanoban/report.hpp"
#include "nanoban/series.hpp"

namespace nanoban {

std::string series_to_json(const MultiSeries& s);
std::string series_to_csv(const MultiSeries& s);
std::string coeff_table_to_json(const CoeffTable& t);
std::string cdisc_to_json(const CoeffByDiscriminant& c);
std::string intq_to_json(const IntQSeries& s, const std::string& name);
std::string cusp_form_to_json(const CuspForm& f, const std::string& name);
std::string gv_table_to_json(const GVTable& t);
std::string report_to_json(const CheckReport& r);

} // namespace nanoban

#endif
