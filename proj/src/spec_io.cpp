#include "hopfcoh/spec_io.hpp"

#include <algorithm>
#include <fstream>

namespace hopfcoh {

namespace {

Field field_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Q") return Field::rationals();
    throw InputError("field must be \"Q\" or {\"p\": prime}, got \"" + s + "\"");
  }
  if (j.is_object() && j.contains("p") && j["p"].is_number_unsigned()) return Field::prime(j["p"].get<std::uint32_t>());
  throw InputError("field must be \"Q\" or {\"p\": prime}");
}

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return Json{{"p", f.characteristic()}};
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j[key];
}

std::size_t index_in(const Json& v, std::size_t bound, const char* what) {
  if (!v.is_number_unsigned()) throw InputError(std::string(what) + ": index must be a non-negative integer");
  const auto i = v.get<std::size_t>();
  if (i >= bound) throw InputError(std::string(what) + ": index " + std::to_string(i) + " out of range");
  return i;
}

Scalar coeff(const Json& v, Field f, const char* what) {
  if (!v.is_string()) throw InputError(std::string(what) + ": coefficients must be strings");
  return f.parse(v.get<std::string>());
}

// Entries [a_0, .., a_{k-1}, "c"] with bounds; place(indices) gives (row, col).
template <class Place>
SparseMatrix read_tensor(const Json& list, Field f, std::size_t rows, std::size_t cols,
                         const std::vector<std::size_t>& bounds, const char* what, Place place) {
  if (!list.is_array()) throw InputError(std::string(what) + " must be a list");
  std::vector<SparseMatrix::Triplet> t;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != bounds.size() + 1)
      throw InputError(std::string(what) + ": each entry needs " + std::to_string(bounds.size()) + " indices and a coefficient");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(index_in(e[k], bounds[k], what));
    auto [r, c] = place(idx);
    t.push_back({r, c, coeff(e[bounds.size()], f, what)});
  }
  return SparseMatrix::from_triplets(f, rows, cols, std::move(t));
}

// Inverse of read_tensor: split(row, col) gives the index list.
template <class Split>
Json write_tensor(const SparseMatrix& m, Split split) {
  std::vector<std::pair<std::vector<std::size_t>, std::string>> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.col(c).entries()) out.push_back({split(e.index, c), e.value.to_string()});
  std::sort(out.begin(), out.end());
  Json arr = Json::array();
  for (auto& [idx, v] : out) {
    Json row = Json::array();
    for (auto i : idx) row.push_back(i);
    row.push_back(v);
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

HopfAlgebra algebra_from_json(const Json& j) {
  const Field f = field_from_json(member(j, "field"));
  const Json& dj = member(j, "dim");
  if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0) throw InputError("dim must be a positive integer");
  const std::size_t d = dj.get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != d) throw InputError("basis must list dim labels");
    for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  }
  auto mul = read_tensor(member(j, "mul"), f, d, d * d, {d, d, d}, "mul",
                         [&](const auto& x) { return std::pair{x[2], x[0] * d + x[1]}; });
  auto unit = read_tensor(member(j, "unit"), f, d, 1, {d}, "unit", [](const auto& x) { return std::pair{x[0], std::size_t{0}}; });
  auto comul = read_tensor(member(j, "comul"), f, d * d, d, {d, d, d}, "comul",
                           [&](const auto& x) { return std::pair{x[1] * d + x[2], x[0]}; });
  const Json& cj = member(j, "counit");
  if (!cj.is_array() || cj.size() != d) throw InputError("counit must be a dense list of dim coefficients");
  std::vector<SparseMatrix::Triplet> ct;
  for (std::size_t i = 0; i < d; ++i) ct.push_back({0, i, coeff(cj[i], f, "counit")});
  auto counit = SparseMatrix::from_triplets(f, 1, d, std::move(ct));
  auto antipode = read_tensor(member(j, "antipode"), f, d, d, {d, d}, "antipode",
                              [](const auto& x) { return std::pair{x[1], x[0]}; });
  return HopfAlgebra(f, std::move(labels), std::move(mul), std::move(unit), std::move(comul), std::move(counit),
                     std::move(antipode));
}

Json algebra_to_json(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  Json j;
  j["field"] = field_to_json(h.field());
  j["dim"] = d;
  j["basis"] = h.labels();
  j["mul"] = write_tensor(h.mul(), [&](std::size_t r, std::size_t c) { return std::vector{c / d, c % d, r}; });
  j["unit"] = write_tensor(h.unit(), [](std::size_t r, std::size_t) { return std::vector{r}; });
  j["comul"] = write_tensor(h.comul(), [&](std::size_t r, std::size_t c) { return std::vector{c, r / d, r % d}; });
  Json counit = Json::array();
  for (std::size_t i = 0; i < d; ++i) counit.push_back(h.counit().at(0, i).to_string());
  j["counit"] = counit;
  j["antipode"] = write_tensor(h.antipode(), [](std::size_t r, std::size_t c) { return std::vector{c, r}; });
  return j;
}

HopfBimodule bimodule_from_json(const Json& j, const HopfAlgebraPtr& algebra) {
  if (!algebra) throw InputError("bimodule file needs an algebra");
  const HopfAlgebra& h = *algebra;
  const Field f = h.field();
  const std::size_t d = h.dim();
  if (j.contains("preset")) {
    const std::string p = j["preset"].get<std::string>();
    const HopfBimodule H = regular_bimodule(algebra);
    if (p == "regular") return H;
    if (p == "under_tensor") return under_tensor(H, H);
    if (p == "bar_tensor") return bar_tensor(H, H);
    if (p == "sandwich_free") return sandwich(free_bimodule(algebra));
    throw InputError("unknown bimodule preset \"" + p + "\"");
  }
  const Json& mj = member(j, "dim");
  if (!mj.is_number_unsigned()) throw InputError("dim must be a non-negative integer");
  const std::size_t m = mj.get<std::size_t>();
  auto la = read_tensor(member(j, "left_action"), f, m, d * m, {d, m, m}, "left_action",
                        [&](const auto& x) { return std::pair{x[2], x[0] * m + x[1]}; });
  auto ra = read_tensor(member(j, "right_action"), f, m, m * d, {m, d, m}, "right_action",
                        [&](const auto& x) { return std::pair{x[2], x[0] * d + x[1]}; });
  auto lc = read_tensor(member(j, "left_coaction"), f, d * m, m, {m, d, m}, "left_coaction",
                        [&](const auto& x) { return std::pair{x[1] * m + x[2], x[0]}; });
  auto rc = read_tensor(member(j, "right_coaction"), f, m * d, m, {m, m, d}, "right_coaction",
                        [&](const auto& x) { return std::pair{x[1] * d + x[2], x[0]}; });
  return HopfBimodule(algebra, m, std::move(la), std::move(ra), std::move(lc), std::move(rc));
}

Json bimodule_to_json(const HopfBimodule& mod) {
  const std::size_t d = mod.hopf().dim(), m = mod.dim();
  Json j;
  j["dim"] = m;
  j["left_action"] = write_tensor(mod.left_action(), [&](std::size_t r, std::size_t c) { return std::vector{c / m, c % m, r}; });
  j["right_action"] = write_tensor(mod.right_action(), [&](std::size_t r, std::size_t c) { return std::vector{c / d, c % d, r}; });
  j["left_coaction"] = write_tensor(mod.left_coaction(), [&](std::size_t r, std::size_t c) { return std::vector{c, r / m, r % m}; });
  j["right_coaction"] = write_tensor(mod.right_coaction(), [&](std::size_t r, std::size_t c) { return std::vector{c, r / d, r % d}; });
  return j;
}

Json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot read " + file.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

namespace {

// nlohmann type errors (wrong JSON kinds) are input errors too.
template <class F>
auto guarded(const std::filesystem::path& file, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

}  // namespace

HopfAlgebraPtr load_algebra(const std::filesystem::path& file) {
  const Json j = read_json(file);
  return guarded(file, [&] { return std::make_shared<const HopfAlgebra>(algebra_from_json(j)); });
}

HopfBimodule load_bimodule(const std::filesystem::path& file, const HopfAlgebraPtr& fallback) {
  const Json j = read_json(file);
  return guarded(file, [&] {
    HopfAlgebraPtr h = fallback;
    if (j.contains("algebra")) {
      const Json& a = j["algebra"];
      HopfAlgebraPtr own = a.is_string() ? load_algebra(file.parent_path() / a.get<std::string>())
                                         : std::make_shared<const HopfAlgebra>(algebra_from_json(a));
      if (fallback && !fallback->same_structure(*own))
        throw InputError(file.string() + ": bimodule is over a different Hopf algebra");
      if (!fallback) h = own;
    }
    return bimodule_from_json(j, h);
  });
}

Json sparse_vector_to_json(const SparseVector& v) {
  Json arr = Json::array();
  for (const auto& e : v.entries()) arr.push_back(Json::array({e.index, e.value.to_string()}));
  return arr;
}

SparseVector sparse_vector_from_json(const Json& j, Field field) {
  std::vector<Entry> entries;
  for (const auto& e : j) entries.push_back({e.at(0).get<std::size_t>(), field.parse(e.at(1).get<std::string>())});
  return SparseVector::from_unsorted(std::move(entries));
}

Json cohomology_to_json(const DoubleComplex& dc, const CohomologyResult& r) {
  Json j;
  j["theory"] = theory_name(dc.theory());
  j["reduced"] = dc.reduced();
  j["field"] = field_to_json(dc.field());
  j["max_degree"] = dc.max_degree();
  j["dims"] = r.dims;
  j["total_dims"] = r.total_dims;
  j["ranks"] = r.ranks;
  Json reps = Json::array();
  for (const auto& deg : r.representatives) {
    Json row = Json::array();
    for (const auto& v : deg) row.push_back(sparse_vector_to_json(v));
    reps.push_back(std::move(row));
  }
  j["representatives"] = std::move(reps);
  return j;
}

CohomologyResult cohomology_from_json(const Json& j, Field field) {
  CohomologyResult r;
  try {
    r.dims = j.at("dims").get<std::vector<std::size_t>>();
    r.total_dims = j.at("total_dims").get<std::vector<std::size_t>>();
    r.ranks = j.at("ranks").get<std::vector<std::size_t>>();
    for (const auto& deg : j.at("representatives")) {
      std::vector<SparseVector> row;
      for (const auto& v : deg) row.push_back(sparse_vector_from_json(v, field));
      r.representatives.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("cohomology result: ") + e.what());
  }
  return r;
}

}  // namespace hopfcoh
