#include "mould/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "mould/error.hpp"

namespace mould {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
  throw Error(Errc::schema_error, where + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

long long integer_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<long long>();
}

bool bool_at(const Json& j, const std::string& where) {
  if (!j.is_boolean()) schema(where, "expected a boolean");
  return j.get<bool>();
}

std::string idx(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

int variable_at(const std::string& name, const std::string& where) {
  auto var = parse_var_name(name);
  if (!var) schema(where, "unknown variable \"" + name + "\"");
  return *var;
}

}  // namespace

Rat parse_rat(const std::string& text, const std::string& where) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    schema(where, "malformed rational \"" + text + "\"");
  }
  if (num[0] == '+') num.erase(0, 1);
  Int d(den);
  if (d == 0) schema(where, "zero denominator in \"" + text + "\"");
  Rat q(Int(num), d);
  q.canonicalize();
  return q;
}

std::string format_rat(const Rat& q) { return q.get_str(); }

Json to_json(const RatFun& f) {
  Json num = Json::array();
  for (const auto& t : f.numerator().terms()) {
    Json e = Json::object();
    for (int v = 0; v < kNumVars; ++v) {
      if (t.mono.exp[v] != 0) e[var_name(v)] = t.mono.exp[v];
    }
    num.push_back({{"c", t.coef.get_str()}, {"e", e}});
  }
  Json den = Json::array();
  for (const auto& d : f.denominator()) {
    Json form = Json::object();
    const auto& c = d.form.coeffs();
    for (int v = 0; v < kNumVars; ++v) {
      if (c[v] != 0) form[var_name(v)] = c[v];
    }
    den.push_back({{"f", form}, {"m", d.mult}});
  }
  return {{"scalar", format_rat(f.scalar())}, {"num", num}, {"den", den}};
}

RatFun ratfun_from_json(const Json& j, const std::string& where) {
  RawFraction raw;
  raw.scalar = parse_rat(string_at(member(j, "scalar", where), where + ".scalar"), where + ".scalar");

  const std::string nw = where + ".num";
  const Json& num = array_at(member(j, "num", where), nw);
  std::vector<std::pair<Monomial, Rat>> terms;
  Int common = 1;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const std::string tw = idx(nw, i);
    Rat c = parse_rat(string_at(member(num[i], "c", tw), tw + ".c"), tw + ".c");
    Monomial m;
    const Json& e = member(num[i], "e", tw);
    if (!e.is_object()) schema(tw + ".e", "expected an object");
    for (const auto& [name, val] : e.items()) {
      const std::string ew = tw + ".e." + name;
      int var = variable_at(name, ew);
      long long k = integer_at(val, ew);
      if (k < 0 || k > 255) schema(ew, "exponent out of range");
      m.exp[var] = static_cast<std::uint8_t>(k);
    }
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    terms.emplace_back(m, c);
  }
  std::vector<Poly::Term> pt;
  for (auto& [m, c] : terms) pt.push_back({m, c.get_num() * (common / c.get_den())});
  raw.num = Poly::from_terms(std::move(pt));
  raw.scalar /= common;

  const std::string dw = where + ".den";
  const Json& den = array_at(member(j, "den", where), dw);
  for (std::size_t i = 0; i < den.size(); ++i) {
    const std::string fw = idx(dw, i);
    const Json& f = member(den[i], "f", fw);
    if (!f.is_object()) schema(fw + ".f", "expected an object");
    LinComb comb{};
    for (const auto& [name, val] : f.items()) {
      const std::string cw = fw + ".f." + name;
      comb[variable_at(name, cw)] += integer_at(val, cw);
    }
    if (is_zero(comb)) schema(fw + ".f", "zero linear form");
    long long mult = integer_at(member(den[i], "m", fw), fw + ".m");
    if (mult < 1 || mult > 1000) schema(fw + ".m", "multiplicity must be a positive integer");
    auto [form, k] = LinForm::normalize(comb);
    Rat kpow = 1;
    for (long long r = 0; r < mult; ++r) kpow *= Rat(Int(static_cast<long>(k)));
    raw.scalar /= kpow;
    raw.den.push_back({form, static_cast<int>(mult)});
  }
  return reduce(std::move(raw));
}

Json to_json(const Bimould& a) {
  Json comps = Json::array();
  for (int r = 0; r <= a.truncation(); ++r) {
    if (a[r].is_zero()) continue;
    comps.push_back({{"length", r}, {"value", to_json(a[r])}});
  }
  Json weight = a.weight() ? Json(*a.weight()) : Json(nullptr);
  return {{"truncation", a.truncation()},
          {"layer", std::string(layer_name(a.layer()))},
          {"weight", weight},
          {"components", comps}};
}

Bimould bimould_from_json(const Json& j, const std::string& where) {
  long long trunc = integer_at(member(j, "truncation", where), where + ".truncation");
  if (trunc < 0 || trunc > kMaxLength) {
    schema(where + ".truncation", "must lie in [0, " + std::to_string(kMaxLength) + "]");
  }
  Layer layer = Layer::general;
  if (j.contains("layer")) {
    auto parsed = parse_layer(string_at(j["layer"], where + ".layer"));
    if (!parsed) schema(where + ".layer", "expected u-const, v-const or general");
    layer = *parsed;
  }
  std::optional<int> weight;
  if (j.contains("weight") && !j["weight"].is_null()) {
    weight = static_cast<int>(integer_at(j["weight"], where + ".weight"));
  }
  Bimould out(static_cast<int>(trunc), layer, weight);
  const std::string cw = where + ".components";
  const Json& comps = array_at(member(j, "components", where), cw);
  std::vector<bool> seen(static_cast<std::size_t>(trunc) + 1, false);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string ew = idx(cw, i);
    long long r = integer_at(member(comps[i], "length", ew), ew + ".length");
    if (r < 0 || r > trunc) schema(ew + ".length", "length outside [0, truncation]");
    if (seen[r]) schema(ew + ".length", "duplicate length " + std::to_string(r));
    seen[r] = true;
    RatFun value = ratfun_from_json(member(comps[i], "value", ew), ew + ".value");
    if (r == 0 && !value.as_constant()) schema(ew + ".value", "length-0 component must be constant");
    for (int v = 0; v < kNumVars; ++v) {
      if ((value.var_mask() >> v & 1U) && position_of(v) > r) {
        schema(ew + ".value", "variable " + var_name(v) + " beyond length " + std::to_string(r));
      }
    }
    out.set(static_cast<int>(r), std::move(value));
  }
  try {
    out.validate();
  } catch (const Error& e) {
    schema(where, e.what());
  }
  return out;
}

Json to_json(const FormalSeqSum& s) {
  Json out = Json::array();
  for (const auto& [seq, coef] : s.terms()) out.push_back({{"seq", seq}, {"coef", to_json(coef)}});
  return out;
}

FormalSeqSum seqsum_from_json(const Json& j, const std::string& where) {
  array_at(j, where);
  FormalSeqSum out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tw = idx(where, i);
    const Json& seq = array_at(member(j[i], "seq", tw), tw + ".seq");
    VarSeq vs;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      long long x = integer_at(seq[k], idx(tw + ".seq", k));
      if (x < 1 || x > kMaxLength) schema(idx(tw + ".seq", k), "variable index out of range");
      if (std::find(vs.begin(), vs.end(), static_cast<int>(x)) != vs.end()) {
        schema(idx(tw + ".seq", k), "repeated variable index");
      }
      vs.push_back(static_cast<int>(x));
    }
    out.add(vs, ratfun_from_json(member(j[i], "coef", tw), tw + ".coef"));
  }
  return out;
}

namespace {

Json failures_json(const std::vector<Failure>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back({{"where", f.where}, {"delta", to_json(f.delta)}});
  return out;
}

std::vector<Failure> failures_from(const Json& j, const std::string& where) {
  array_at(j, where);
  std::vector<Failure> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string fw = idx(where, i);
    out.push_back({string_at(member(j[i], "where", fw), fw + ".where"),
                   ratfun_from_json(member(j[i], "delta", fw), fw + ".delta")});
  }
  return out;
}

}  // namespace

Json to_json(const CheckReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    conds.push_back({{"name", c.name},
                     {"pass", c.pass},
                     {"required", c.required},
                     {"failures", failures_json(c.failures)}});
  }
  return {{"name", r.name},
          {"params", r.params},
          {"pass", r.pass},
          {"failures", failures_json(r.failures)},
          {"conditions", conds},
          {"duration_seconds", r.duration_seconds}};
}

CheckReport report_from_json(const Json& j, const std::string& where) {
  CheckReport r;
  r.name = string_at(member(j, "name", where), where + ".name");
  r.params = member(j, "params", where);
  r.pass = bool_at(member(j, "pass", where), where + ".pass");
  r.failures = failures_from(member(j, "failures", where), where + ".failures");
  if (j.contains("conditions")) {
    const std::string cw = where + ".conditions";
    const Json& conds = array_at(j["conditions"], cw);
    for (std::size_t i = 0; i < conds.size(); ++i) {
      const std::string ew = idx(cw, i);
      Condition c;
      c.name = string_at(member(conds[i], "name", ew), ew + ".name");
      c.pass = bool_at(member(conds[i], "pass", ew), ew + ".pass");
      c.required = bool_at(member(conds[i], "required", ew), ew + ".required");
      c.failures = failures_from(member(conds[i], "failures", ew), ew + ".failures");
      r.conditions.push_back(std::move(c));
    }
  }
  if (j.contains("duration_seconds")) {
    if (!j["duration_seconds"].is_number()) schema(where + ".duration_seconds", "expected a number");
    r.duration_seconds = j["duration_seconds"].get<double>();
  }
  return r;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::schema_error, path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::schema_error, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_argument, path.string() + ": cannot write file");
  out << j.dump(2) << "\n";
}

}  // namespace mould
