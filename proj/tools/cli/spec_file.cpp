#include "spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace balancegate::cli {

namespace {

void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw ValidationError("unknown key '" + key + "' in " + where);
}

RegisterSpec register_from_json(const nlohmann::json& r, bool single) {
  if (!r.is_object()) throw ValidationError("each register must be an object");
  reject_unknown_keys(r, {"name", "length", "polynomial", "initial_state"}, "register");
  RegisterSpec spec;
  if (r.contains("name")) {
    const auto& name = r.at("name");
    if (!name.is_string() || name.get<std::string>().size() != 1)
      throw ValidationError("register name must be a single letter");
    spec.name = name.get<std::string>()[0];
  } else if (!single) {
    throw ValidationError("register name is required when there are several registers");
  }
  if (!r.contains("length") || !r.at("length").is_number_unsigned() || r.at("length").get<std::size_t>() == 0)
    throw ValidationError(std::string("register '") + spec.name + "' needs a positive integer length");
  spec.length = r.at("length").get<std::size_t>();
  if (r.contains("polynomial")) {
    const auto& p = r.at("polynomial");
    if (!p.is_array()) throw ValidationError("polynomial must be a list of exponents");
    std::vector<unsigned> exps;
    for (const auto& e : p) {
      if (!e.is_number_unsigned()) throw ValidationError("polynomial exponents must be non-negative integers");
      exps.push_back(e.get<unsigned>());
    }
    const ConnectionPolynomial poly(exps);
    if (poly.degree() != spec.length)
      throw ValidationError(std::string("polynomial of register '") + spec.name +
                            "' must include exponent " + std::to_string(spec.length) +
                            " and no higher one");
    spec.polynomial = std::move(exps);
  }
  if (r.contains("initial_state")) {
    if (!r.at("initial_state").is_string()) throw ValidationError("initial_state must be a bit string");
    const auto s = r.at("initial_state").get<std::string>();
    if (parse_state(s, spec.length) == 0)
      throw ValidationError(std::string("initial state of register '") + spec.name + "' is zero");
    spec.initial_state = s;
  }
  return spec;
}

}  // namespace

RegisterLayout SpecFile::layout() const {
  std::vector<std::pair<char, std::size_t>> regs;
  for (const auto& r : registers) regs.emplace_back(r.name, r.length);
  return RegisterLayout(std::move(regs));
}

AnfFunction SpecFile::parsed_function() const { return parse_function(function, layout()); }

SpecFile spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("spec file must contain a JSON object");
  reject_unknown_keys(doc, {"registers", "function", "tolerance"}, "spec file");
  if (!doc.contains("registers") || !doc.at("registers").is_array() || doc.at("registers").empty())
    throw ValidationError("spec file needs a non-empty 'registers' list");
  if (!doc.contains("function") || !doc.at("function").is_string())
    throw ValidationError("spec file needs a 'function' string");

  SpecFile spec;
  const bool single = doc.at("registers").size() == 1;
  for (const auto& r : doc.at("registers")) spec.registers.push_back(register_from_json(r, single));
  spec.function = doc.at("function").get<std::string>();
  if (doc.contains("tolerance")) {
    if (!doc.at("tolerance").is_string()) throw ValidationError("tolerance must be a string like \"1/100\"");
    spec.tolerance = parse_rational(doc.at("tolerance").get<std::string>());
  }
  (void)spec.layout();  // names unique, lengths positive
  return spec;
}

SpecFile parse_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("spec file is not valid JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return parse_spec(buffer.str());
}

ResolvedLfsrs resolve_lfsrs(const SpecFile& spec) {
  ResolvedLfsrs out;
  for (const auto& r : spec.registers) {
    const std::string name(1, r.name);
    std::optional<ConnectionPolynomial> poly;
    if (r.polynomial) {
      poly.emplace(*r.polynomial);
    } else if (r.length == 1) {
      poly.emplace(std::vector<unsigned>{1, 0});
    } else if (r.length <= kMaxTableDegree) {
      poly = primitive_polynomial(static_cast<unsigned>(r.length));
    } else {
      throw ValidationError("register '" + name + "' of length " + std::to_string(r.length) +
                            " has no polynomial and none is built in");
    }
    if (!r.polynomial)
      out.notices.push_back("register " + name + ": using built-in polynomial " + poly->to_string());
    if (r.length > kMaxLfsrLength)
      throw ValidationError("register '" + name + "' is too long to simulate");
    if (r.initial_state) {
      out.lfsrs.emplace_back(r.length, *poly, parse_state(*r.initial_state, r.length));
    } else {
      out.lfsrs.emplace_back(r.length, *poly);
      out.notices.push_back("register " + name + ": using initial state " +
                            std::string(r.length, '1'));
    }
  }
  return out;
}

}  // namespace balancegate::cli
