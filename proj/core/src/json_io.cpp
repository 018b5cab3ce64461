#include "qswitch/json_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qswitch {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("expected complex number as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(complex_to_json(m(r, c)));
  return out;
}

Matrix matrix_from_json(const json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    throw std::runtime_error(std::string(what) + ": expected " +
                             std::to_string(rows * cols) + " row-major entries");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[static_cast<size_t>(r * cols + c)]);
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw std::runtime_error(std::string(what) + ": expected a nonempty array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::runtime_error("malformed JSON");
  return j;
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::runtime_error(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

json channel_json(const Channel& ch) {
  json kraus = json::array();
  for (const Matrix& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
  return json{{"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}, {"kraus", kraus}};
}

Channel channel_from(const json& j) {
  const int din = int_field(j, "dim_in");
  const int dout = int_field(j, "dim_out");
  if (din < 1 || dout < 1) throw std::runtime_error("channel dimensions must be positive");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
    throw std::runtime_error("channel needs a nonempty \"kraus\" array");
  std::vector<Matrix> kraus;
  for (const json& k : j["kraus"]) kraus.push_back(matrix_from_json(k, dout, din, "kraus"));
  return Channel(din, dout, std::move(kraus));
}

json density_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"matrix", matrix_to_json(rho.mat())}};
}

DensityMatrix density_from(const json& j) {
  const int d = int_field(j, "dim");
  if (d < 1) throw std::runtime_error("density dimension must be positive");
  if (!j.contains("matrix")) throw std::runtime_error("density needs a \"matrix\" field");
  return DensityMatrix(matrix_from_json(j["matrix"], d, d, "matrix"));
}

}  // namespace

std::string channel_to_json(const Channel& ch) { return channel_json(ch).dump(); }

Channel channel_from_json(const std::string& text) { return channel_from(parse(text)); }

std::string density_to_json(const DensityMatrix& rho) { return density_json(rho).dump(); }

DensityMatrix density_from_json(const std::string& text) {
  return density_from(parse(text));
}

std::string path_config_to_json(const PathConfig& cfg) {
  json channels = json::array();
  for (const Channel& c : cfg.channels) channels.push_back(channel_json(c));
  json alphas;
  if (cfg.alphas.empty()) {
    alphas = nullptr;
  } else {
    alphas = json::array();
    for (const Vector& a : cfg.alphas) alphas.push_back(vector_to_json(a));
  }
  return json{{"phi", vector_to_json(cfg.phi)},
              {"channels", channels},
              {"alphas", alphas}}
      .dump();
}

PathConfig path_config_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("phi") || !j.contains("channels") || !j["channels"].is_array() ||
      j["channels"].empty())
    throw std::runtime_error("path config needs \"phi\" and a nonempty \"channels\"");
  PathConfig cfg;
  cfg.phi = vector_from_json(j["phi"], "phi");
  for (const json& c : j["channels"]) cfg.channels.push_back(channel_from(c));
  if (j.contains("alphas") && !j["alphas"].is_null()) {
    if (!j["alphas"].is_array())
      throw std::runtime_error("alphas must be an array or null");
    for (const json& a : j["alphas"]) cfg.alphas.push_back(vector_from_json(a, "alphas"));
  }
  validated_alphas(cfg);  // surface structural errors at parse time
  return cfg;
}

std::string erasure_pair_to_json(const ErasurePair& pair) {
  return json{{"d", pair.d},
              {"phi", vector_to_json(pair.phi)},
              {"psi", vector_to_json(pair.psi)},
              {"omega", density_json(pair.omega.density())}}
      .dump();
}

ErasurePair erasure_pair_from_json(const std::string& text) {
  const json j = parse(text);
  const int d = int_field(j, "d");
  if (!j.contains("phi") || !j.contains("psi") || !j.contains("omega"))
    throw std::runtime_error("erasure pair needs \"phi\", \"psi\" and \"omega\"");
  ErasurePair pair{d, vector_from_json(j["phi"], "phi"),
                   vector_from_json(j["psi"], "psi"),
                   ControlState(density_from(j["omega"]))};
  validate(pair);
  return pair;
}

}  // namespace qswitch
