#include "cohom/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cohom/errors.hpp"

namespace cohom {

using json = nlohmann::ordered_json;

namespace {

json factor_to_json(const IrrepParams& p) {
  json j;
  j["series"] = series_name(p.series);
  j["mu"] = p.mu;
  j["epsilon"] = p.epsilon;
  if (p.discrete()) j["n"] = p.n;
  return j;
}

IrrepParams factor_from_json(const json& j) {
  if (!j.contains("series") || !j.contains("mu") || !j.contains("epsilon"))
    throw Error(ErrorCode::BadInput, "factor needs series, mu, epsilon");
  Series s = series_from_name(j.at("series").get<std::string>());
  double mu = j.at("mu").get<double>();
  int eps = j.at("epsilon").get<int>();
  IrrepParams p = classify(mu, eps, s);
  if (j.contains("n") && j.at("n").get<int>() != p.n)
    throw Error(ErrorCode::BadInput, "factor n inconsistent with mu");
  return p;
}

json tensor_to_json_obj(const CoeffTensor& f) {
  json j;
  j["factors"] = json::array();
  for (const auto& p : f.params().factors) j["factors"].push_back(factor_to_json(p));
  j["window"] = json::array();
  for (const auto& ax : f.window().axes) j["window"].push_back({ax.lo, ax.hi});
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
  j["coeffs"] = std::move(coeffs);
  return j;
}

CoeffTensor tensor_from_json_obj(const json& j) {
  if (!j.contains("factors") || !j.contains("window") || !j.contains("coeffs"))
    throw Error(ErrorCode::BadInput, "tensor needs factors, window, coeffs");
  TensorParams tp;
  for (const auto& fj : j.at("factors")) tp.factors.push_back(factor_from_json(fj));
  Window w;
  for (const auto& wj : j.at("window")) {
    if (!wj.is_array() || wj.size() != 2)
      throw Error(ErrorCode::BadInput, "window entries are [lo,hi] pairs");
    w.axes.push_back({wj.at(0).get<long long>(), wj.at(1).get<long long>()});
  }
  CoeffTensor f(tp, w);
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != f.size())
    throw Error(ErrorCode::BadInput, "coeff count does not match the window size");
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& c = coeffs.at(i);
    if (!c.is_array() || c.size() != 2)
      throw Error(ErrorCode::BadInput, "coeffs are [re,im] pairs");
    f.coeffs()[i] = Complex(c.at(0).get<double>(), c.at(1).get<double>());
  }
  return f;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::BadInput, "invalid JSON");
  return j;
}

}  // namespace

std::string tensor_to_json(const CoeffTensor& f) {
  return tensor_to_json_obj(f).dump();
}

CoeffTensor tensor_from_json(const std::string& text) {
  return tensor_from_json_obj(parse(text));
}

std::string form_to_json(const DifferentialForm& w) {
  json j;
  j["degree"] = w.degree();
  json comps = json::object();
  for (const auto& [axes, t] : w.components()) {
    std::string key;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(axes[i]);
    }
    comps[key] = tensor_to_json_obj(t);
  }
  j["components"] = std::move(comps);
  return j.dump();
}

DifferentialForm form_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("degree") || !j.contains("components"))
    throw Error(ErrorCode::BadInput, "form needs degree and components");
  int degree = j.at("degree").get<int>();
  const auto& comps = j.at("components");
  if (!comps.is_object() || comps.empty())
    throw Error(ErrorCode::BadInput, "form needs at least one component");

  std::map<std::vector<int>, CoeffTensor> parsed;
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    std::vector<int> axes;
    std::stringstream ss(it.key());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) axes.push_back(std::stoi(tok));
    }
    parsed.emplace(std::move(axes), tensor_from_json_obj(it.value()));
  }
  // the form window is the hull of the component windows
  Window hull = parsed.begin()->second.window();
  for (const auto& [axes, t] : parsed) hull = Window::hull(hull, t.window());
  DifferentialForm w(parsed.begin()->second.params(), degree, hull);
  for (auto& [axes, t] : parsed) w.set_component(axes, std::move(t));
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write '" + path + "'");
  out << content;
}

}  // namespace cohom
