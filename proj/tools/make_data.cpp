// Writes the bundled algebra and bimodule files into the given directory.
#include <fstream>
#include <iostream>

#include "hopfcoh/spec_io.hpp"

using namespace hopfcoh;

namespace {

// One key per line, lists of entries one entry per line.
void write(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  out << "{";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    out << (first ? "\n" : ",\n") << "  " << Json(key).dump() << ": ";
    first = false;
    if (value.is_array() && !value.empty() && value[0].is_array()) {
      out << "[";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ",\n    " : "\n    ") << value[i].dump();
      out << "\n  ]";
    } else {
      out << value.dump();
    }
  }
  out << "\n}\n";
  std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_data DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  const Field q = Field::rationals(), f2 = Field::prime(2), f7 = Field::prime(7);
  auto s3 = group_algebra(symmetric_group3_table(), q, {"e", "s", "t", "st", "ts", "sts"});
  const std::vector<std::pair<std::string, HopfAlgebra>> algebras = {
      {"kc2_q", group_algebra(cyclic_group_table(2), q, {"1", "g"})},
      {"kc2_gf2", group_algebra(cyclic_group_table(2), f2, {"1", "g"})},
      {"ks3_q", s3},
      {"ks3_dual_q", dual_hopf_algebra(s3)},
      {"taft2_q", taft_algebra(2, q.from_int(-1), q)},
      {"taft3_gf7", taft_algebra(3, f7.from_int(2), f7)},
  };
  for (const auto& [name, h] : algebras) write(dir / (name + ".json"), algebra_to_json(h));

  // Negative control: counit doubled on the group-like generator.
  Json broken = algebra_to_json(algebras[0].second);
  broken["counit"][1] = "2";
  write(dir / "kc2_q_broken_counit.json", broken);

  // H (x) H with regular outer actions and codiagonal coactions, written out in full.
  auto kc2 = std::make_shared<const HopfAlgebra>(algebras[0].second);
  auto H = regular_bimodule(kc2);
  Json ut = bimodule_to_json(under_tensor(H, H));
  ut["algebra"] = "kc2_q.json";
  write(dir / "kc2_q_under_tensor.json", ut);
  write(dir / "kc2_q_regular.json", Json{{"algebra", "kc2_q.json"}, {"preset", "regular"}});
  return 0;
}
