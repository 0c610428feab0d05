#include "irsnoma/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "irsnoma/version.hpp"

namespace irsnoma {

namespace {

using nlohmann::json;

template <typename T>
struct EnumNames {
  std::vector<std::pair<const char*, T>> entries;

  std::string to_string(T v) const {
    for (const auto& [name, val] : entries)
      if (val == v) return name;
    throw ConfigError("unserializable enum value");
  }
  T from_string(const std::string& s, const char* field) const {
    for (const auto& [name, val] : entries)
      if (s == name) return val;
    throw ConfigError(std::string("invalid value '") + s + "' for " + field);
  }
};

const EnumNames<ThresholdMode> kThresholdMode{{
    {"explicit", ThresholdMode::explicit_thresholds},
    {"from_rate", ThresholdMode::from_rate},
}};
const EnumNames<Eq15Variant> kEq15{{
    {"as_printed", Eq15Variant::as_printed},
    {"sic_corrected", Eq15Variant::sic_corrected},
}};
const EnumNames<Hop2Interference> kHop2Int{{
    {"off", Hop2Interference::off},
    {"on", Hop2Interference::on},
}};
const EnumNames<CrPrefactor> kCrPrefactor{{
    {"eq21", CrPrefactor::eq21},
    {"appendix_b", CrPrefactor::appendix_b},
    {"eq35", CrPrefactor::eq35},
}};
const EnumNames<RcPrefactor> kRcPrefactor{{
    {"eq10", RcPrefactor::eq10},
    {"appendix_b", RcPrefactor::appendix_b},
}};
const EnumNames<LognormalVariant> kLognormalVariant{{
    {"as_printed", LognormalVariant::as_printed},
    {"moment_matched", LognormalVariant::moment_matched},
}};
const EnumNames<Hop2Shape> kHop2Shape{{
    {"use_n", Hop2Shape::use_n},
    {"use_m", Hop2Shape::use_m},
}};
const EnumNames<NoiseNormalization> kNoiseNorm{{
    {"as_printed", NoiseNormalization::as_printed},
    {"include", NoiseNormalization::include_noise},
}};
const EnumNames<ChannelMode> kChannelMode{{
    {"assumption", ChannelMode::assumption},
    {"physical", ChannelMode::physical},
}};

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* where) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ConfigError(std::string("unknown key '") + key + "' in " + where);
}

double get_number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

json params_to_json(const SystemParams& p) {
  json j;
  j["p_s"] = p.p_s;
  j["n0"] = p.n0;
  j["n_elems"] = p.n_elems;
  j["m_elems"] = p.m_elems;
  j["a1"] = p.a1;
  j["a2"] = p.a2;
  j["b1"] = p.b1;
  j["b2"] = p.b2;
  j["eta"] = p.eta;
  j["theta"] = p.theta;
  j["beta"] = p.beta;
  j["zeta"] = p.zeta;
  j["lambda_sr"] = p.lambda_sr;
  j["lambda_rd1"] = p.lambda_rd1;
  j["lambda_rd2"] = p.lambda_rd2;
  j["lambda_rc"] = p.lambda_rc;
  j["lambda_cr"] = p.lambda_cr;
  j["lambda_cd1"] = p.lambda_cd1;
  j["lambda_cd2"] = p.lambda_cd2;
  j["rate_main"] = p.rate_main;
  j["rate_bs"] = p.rate_bs;
  if (p.gamma_th_d) j["gamma_th_d"] = *p.gamma_th_d;
  if (p.gamma_th_c) j["gamma_th_c"] = *p.gamma_th_c;
  j["threshold_mode"] = kThresholdMode.to_string(p.threshold_mode);
  j["eq15_variant"] = kEq15.to_string(p.eq15_variant);
  j["hop2_interference"] = kHop2Int.to_string(p.hop2_interference);
  j["cr_prefactor"] = kCrPrefactor.to_string(p.cr_prefactor);
  j["rc_prefactor"] = kRcPrefactor.to_string(p.rc_prefactor);
  j["lognormal_variant"] = kLognormalVariant.to_string(p.lognormal_variant);
  j["hop2_shape"] = kHop2Shape.to_string(p.hop2_shape);
  j["noise_normalization"] = kNoiseNorm.to_string(p.noise_normalization);
  return j;
}

SystemParams params_from_json(const json& j) {
  static const std::set<std::string> allowed = {
      "p_s", "n0", "n_elems", "m_elems", "a1", "a2", "b1", "b2", "eta", "theta", "beta", "zeta",
      "lambda_sr", "lambda_rd1", "lambda_rd2", "lambda_rc", "lambda_cr", "lambda_cd1", "lambda_cd2",
      "rate_main", "rate_bs", "gamma_th_d", "gamma_th_c", "threshold_mode", "eq15_variant",
      "hop2_interference", "cr_prefactor", "rc_prefactor", "lognormal_variant", "hop2_shape",
      "noise_normalization"};
  reject_unknown_keys(j, allowed, "params");
  SystemParams p;
  if (j.contains("p_s")) p.p_s = get_number(j, "p_s");
  if (j.contains("n0")) p.n0 = get_number(j, "n0");
  if (j.contains("n_elems")) p.n_elems = j.at("n_elems").get<int>();
  if (j.contains("m_elems")) p.m_elems = j.at("m_elems").get<int>();
  if (j.contains("a1")) p.a1 = get_number(j, "a1");
  if (j.contains("a2")) p.a2 = get_number(j, "a2");
  if (j.contains("b1")) p.b1 = get_number(j, "b1");
  if (j.contains("b2")) p.b2 = get_number(j, "b2");
  if (j.contains("eta")) p.eta = get_number(j, "eta");
  if (j.contains("theta")) p.theta = get_number(j, "theta");
  if (j.contains("beta")) p.beta = get_number(j, "beta");
  if (j.contains("zeta")) p.zeta = get_number(j, "zeta");
  if (j.contains("lambda_sr")) p.lambda_sr = get_number(j, "lambda_sr");
  if (j.contains("lambda_rd1")) p.lambda_rd1 = get_number(j, "lambda_rd1");
  if (j.contains("lambda_rd2")) p.lambda_rd2 = get_number(j, "lambda_rd2");
  if (j.contains("lambda_rc")) p.lambda_rc = get_number(j, "lambda_rc");
  if (j.contains("lambda_cr")) p.lambda_cr = get_number(j, "lambda_cr");
  if (j.contains("lambda_cd1")) p.lambda_cd1 = get_number(j, "lambda_cd1");
  if (j.contains("lambda_cd2")) p.lambda_cd2 = get_number(j, "lambda_cd2");
  if (j.contains("rate_main")) p.rate_main = get_number(j, "rate_main");
  if (j.contains("rate_bs")) p.rate_bs = get_number(j, "rate_bs");
  if (j.contains("gamma_th_d")) p.gamma_th_d = get_number(j, "gamma_th_d");
  if (j.contains("gamma_th_c")) p.gamma_th_c = get_number(j, "gamma_th_c");
  if (j.contains("threshold_mode"))
    p.threshold_mode = kThresholdMode.from_string(j.at("threshold_mode"), "threshold_mode");
  if (j.contains("eq15_variant"))
    p.eq15_variant = kEq15.from_string(j.at("eq15_variant"), "eq15_variant");
  if (j.contains("hop2_interference"))
    p.hop2_interference = kHop2Int.from_string(j.at("hop2_interference"), "hop2_interference");
  if (j.contains("cr_prefactor"))
    p.cr_prefactor = kCrPrefactor.from_string(j.at("cr_prefactor"), "cr_prefactor");
  if (j.contains("rc_prefactor"))
    p.rc_prefactor = kRcPrefactor.from_string(j.at("rc_prefactor"), "rc_prefactor");
  if (j.contains("lognormal_variant"))
    p.lognormal_variant = kLognormalVariant.from_string(j.at("lognormal_variant"), "lognormal_variant");
  if (j.contains("hop2_shape")) p.hop2_shape = kHop2Shape.from_string(j.at("hop2_shape"), "hop2_shape");
  if (j.contains("noise_normalization"))
    p.noise_normalization = kNoiseNorm.from_string(j.at("noise_normalization"), "noise_normalization");
  return p;
}

json mc_to_json(const McConfig& mc) {
  json j;
  j["trials"] = mc.trials;
  j["seed"] = mc.seed;
  j["channel_mode"] = kChannelMode.to_string(mc.channel_mode);
  j["confidence_z"] = mc.confidence_z;
  j["partitions"] = mc.partitions;
  return j;
}

McConfig mc_from_json(const json& j) {
  static const std::set<std::string> allowed = {"trials", "seed", "channel_mode", "confidence_z",
                                                "partitions"};
  reject_unknown_keys(j, allowed, "mc");
  McConfig mc;
  if (j.contains("trials")) mc.trials = j.at("trials").get<std::uint64_t>();
  if (j.contains("seed")) mc.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("channel_mode"))
    mc.channel_mode = kChannelMode.from_string(j.at("channel_mode"), "channel_mode");
  if (j.contains("confidence_z")) mc.confidence_z = get_number(j, "confidence_z");
  if (j.contains("partitions")) mc.partitions = j.at("partitions").get<std::uint32_t>();
  return mc;
}

json axis_to_json(const Axis& a) {
  json j;
  j["names"] = a.names;
  j["values"] = a.values;
  return j;
}

Axis axis_from_json(const json& j) {
  static const std::set<std::string> allowed = {"names", "values"};
  reject_unknown_keys(j, allowed, "axis");
  Axis a;
  a.names = j.at("names").get<std::vector<std::string>>();
  a.values = j.at("values").get<std::vector<std::vector<double>>>();
  return a;
}

json spec_to_json_obj(const SweepSpec& s) {
  json j;
  j["base"] = params_to_json(s.base);
  j["axis"] = axis_to_json(s.axis);
  if (s.secondary) j["secondary"] = axis_to_json(*s.secondary);
  json outs = json::array();
  for (OutputKind k : s.outputs) outs.push_back(output_kind_name(k));
  j["outputs"] = outs;
  j["mc"] = mc_to_json(s.mc);
  j["include_analytic"] = s.include_analytic;
  j["include_mc"] = s.include_mc;
  return j;
}

SweepSpec spec_from_json_obj(const json& j) {
  static const std::set<std::string> allowed = {"base",          "axis", "secondary",
                                                "outputs",       "mc",   "include_analytic",
                                                "include_mc"};
  reject_unknown_keys(j, allowed, "sweep spec");
  SweepSpec s;
  s.base = params_from_json(j.at("base"));
  s.axis = axis_from_json(j.at("axis"));
  if (j.contains("secondary")) s.secondary = axis_from_json(j.at("secondary"));
  for (const auto& name : j.at("outputs")) s.outputs.push_back(output_kind_from_name(name));
  if (j.contains("mc")) s.mc = mc_from_json(j.at("mc"));
  if (j.contains("include_analytic")) s.include_analytic = j.at("include_analytic").get<bool>();
  if (j.contains("include_mc")) s.include_mc = j.at("include_mc").get<bool>();
  return s;
}

json parse_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError(std::string("malformed JSON in ") + what);
  return j;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  const json j = parse_text(text, "run config");
  static const std::set<std::string> allowed = {"params", "mc"};
  reject_unknown_keys(j, allowed, "run config");
  RunConfig c;
  if (j.contains("params")) c.params = params_from_json(j.at("params"));
  if (j.contains("mc")) c.mc = mc_from_json(j.at("mc"));
  return c;
}

RunConfig load_run_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string run_config_to_json(const RunConfig& c) {
  json j;
  j["params"] = params_to_json(c.params);
  j["mc"] = mc_to_json(c.mc);
  return j.dump(2);
}

std::string sweep_spec_to_json(const SweepSpec& s) { return spec_to_json_obj(s).dump(); }

SweepSpec sweep_spec_from_json(const std::string& text) {
  return spec_from_json_obj(parse_text(text, "sweep spec"));
}

std::string sweep_metadata_json(const SweepSpec& s) {
  json j;
  j["version"] = kVersion;
  j["spec"] = spec_to_json_obj(s);
  return j.dump();
}

SweepSpec sweep_spec_from_metadata(const std::string& text) {
  const json j = parse_text(text, "sweep metadata");
  if (!j.contains("spec")) throw ConfigError("sweep metadata lacks a 'spec' object");
  return spec_from_json_obj(j.at("spec"));
}

}  // namespace irsnoma
