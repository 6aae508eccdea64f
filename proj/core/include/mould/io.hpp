#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "mould/bimould.hpp"
#include "mould/dshuffle.hpp"
#include "mould/report.hpp"

namespace mould {

using Json = nlohmann::json;

// Readers throw Error(Errc::schema_error) naming the offending location as a
// JSON path such as $.components[2].value.num[0].c.
Rat parse_rat(const std::string& text, const std::string& where = "$");
std::string format_rat(const Rat& q);

Json to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j, const std::string& where = "$");

Json to_json(const Bimould& a);
Bimould bimould_from_json(const Json& j, const std::string& where = "$");

Json to_json(const FormalSeqSum& s);
FormalSeqSum seqsum_from_json(const Json& j, const std::string& where = "$");

Json to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j, const std::string& where = "$");

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace mould
