#include <doctest.h>

#include <nlohmann/json.hpp>

#include "qswitch/json_io.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/sampling.hpp"

using namespace qswitch;

TEST_CASE("channel JSON: schema fields and round trip") {
  const Channel xy = pauli_channel(PauliVector({0, 0.5, 0.5, 0}));
  const std::string text = channel_to_json(xy);

  const auto j = nlohmann::json::parse(text);
  CHECK(j["dim_in"] == 2);
  CHECK(j["dim_out"] == 2);
  REQUIRE(j["kraus"].is_array());
  CHECK(j["kraus"].size() == 2);
  CHECK(j["kraus"][0].size() == 4);        // flat row-major entries
  CHECK(j["kraus"][0][0].size() == 2);     // [re, im]

  const Channel back = channel_from_json(text);
  CHECK(choi_distance(back, xy) < 1e-12);
}

TEST_CASE("channel JSON round trip on random channels") {
  Rng rng(3);
  for (int t = 0; t < 8; ++t) {
    const Channel ch = random_channel(2 + t % 2, 2 + t % 3, rng);
    const Channel back = channel_from_json(channel_to_json(ch));
    CHECK(back.dim_in() == ch.dim_in());
    CHECK(back.dim_out() == ch.dim_out());
    CHECK(choi_distance(back, ch) < 1e-12);
  }
}

TEST_CASE("channel JSON rejects malformed input") {
  CHECK_THROWS(channel_from_json("not json"));
  CHECK_THROWS(channel_from_json("{}"));
  CHECK_THROWS(channel_from_json(R"({"dim_in": 2, "dim_out": 2, "kraus": []})"));
  // Wrong entry count for the declared shape.
  CHECK_THROWS(channel_from_json(
      R"({"dim_in": 2, "dim_out": 2, "kraus": [[[1,0],[0,0]]]})"));
  CHECK_THROWS(channel_from_json(
      R"({"dim_in": 0, "dim_out": 2, "kraus": [[[1,0]]]})"));
}

TEST_CASE("density JSON round trip") {
  Rng rng(5);
  const DensityMatrix rho = random_density(3, rng);
  const DensityMatrix back = density_from_json(density_to_json(rho));
  CHECK(max_abs(back.mat() - rho.mat()) < 1e-12);
  CHECK_THROWS(density_from_json(R"({"dim": 2, "matrix": [[1,0]]})"));
}

TEST_CASE("path config JSON: null alphas and explicit alphas") {
  const Channel xy = pauli_channel(PauliVector({0, 0.5, 0.5, 0}));
  PathConfig cfg;
  cfg.channels = {xy, xy};
  cfg.phi = Vector::Constant(2, 1.0 / std::sqrt(2.0));
  const std::string text = path_config_to_json(cfg);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["alphas"].is_null());

  const PathConfig back = path_config_from_json(text);
  CHECK(back.channels.size() == 2);
  CHECK(back.alphas.empty());
  CHECK(choi_distance(path_superposition(back), path_superposition(cfg)) < 1e-12);

  cfg.alphas = {Vector::Constant(2, 1.0 / std::sqrt(2.0)),
                Vector::Constant(2, 1.0 / std::sqrt(2.0))};
  const PathConfig back2 = path_config_from_json(path_config_to_json(cfg));
  CHECK(back2.alphas.size() == 2);

  CHECK_THROWS(path_config_from_json(R"({"phi": [[1,0]], "channels": []})"));
}

TEST_CASE("erasure pair JSON round trip") {
  Rng rng(7);
  const ErasurePair pair = random_erasure_pair(3, rng);
  const ErasurePair back = erasure_pair_from_json(erasure_pair_to_json(pair));
  CHECK(back.d == 3);
  CHECK((back.phi - pair.phi).norm() < 1e-12);
  CHECK((back.psi - pair.psi).norm() < 1e-12);
  CHECK(max_abs(back.omega.density().mat() - pair.omega.density().mat()) < 1e-12);

  CHECK_THROWS(erasure_pair_from_json(R"({"d": 2, "phi": [[1,0],[0,0]]})"));
}
