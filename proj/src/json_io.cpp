#include "jkinv/json_io.hpp"

#include "jkinv/errors.hpp"

#include <fstream>
#include <sstream>

namespace jkinv {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t nat(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a natural number");
  return j.get<std::size_t>();
}

Multiset multiset_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  Multiset m;
  for (const auto& v : j) {
    const std::size_t x = nat(v, what);
    if (x == 0) throw InputError(std::string(what) + " entries must be positive");
    m.push_back(static_cast<unsigned>(x));
  }
  return sorted_desc(m);
}

Json to_json(const Multiset& m) { return Json(sorted_desc(m)); }

template <class F>
auto as_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InternalConsistencyError& e) {
    throw InputError(e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  throw InputError("rational must be a string \"p\" or \"p/q\"");
}

Json to_json(const Rat& q) { return to_string(q); }

Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InputError("matrix must have " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw InputError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rat_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Pencil pencil_from_json(const Json& j) {
  const std::size_t m = nat(field(j, "m"), "m"), n = nat(field(j, "n"), "n");
  return Pencil(mat_from_json(field(j, "A"), m, n), mat_from_json(field(j, "B"), m, n));
}

Json to_json(const Pencil& p) { return {{"m", p.rows()}, {"n", p.cols()}, {"A", to_json(p.A)}, {"B", to_json(p.B)}}; }

Json to_json(const JordanMap& jm) {
  Json out = Json::array();
  for (const auto& [c, sizes] : jm)
    out.push_back({{"class", c.label()}, {"rootCount", c.root_count()}, {"sizes", to_json(sizes)}});
  return out;
}

JordanMap jordan_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("jordan must be an array");
  JordanMap out;
  for (const auto& e : j) {
    const Json& cls = field(e, "class");
    if (!cls.is_string()) throw InputError("class must be a string");
    EigClass c = EigClass::parse(cls.get<std::string>());
    if (e.contains("rootCount") && nat(e["rootCount"], "rootCount") != c.root_count())
      throw InputError("rootCount does not match class " + c.label());
    Multiset sizes = multiset_from_json(field(e, "sizes"), "sizes");
    if (sizes.empty()) throw InputError("empty Jordan class " + c.label());
    if (!out.emplace(c, sizes).second) throw InputError("duplicate class " + c.label());
  }
  return out;
}

Json to_json(const StrictInvariants& inv) {
  return {{"m", inv.rows},
          {"n", inv.cols},
          {"rank", inv.rank},
          {"horizontal", to_json(inv.horizontal)},
          {"vertical", to_json(inv.vertical)},
          {"jordan", to_json(inv.jordan)}};
}

StrictInvariants invariants_from_json(const Json& j) {
  StrictInvariants inv;
  inv.rows = nat(field(j, "m"), "m");
  inv.cols = nat(field(j, "n"), "n");
  inv.rank = nat(field(j, "rank"), "rank");
  inv.horizontal = multiset_from_json(field(j, "horizontal"), "horizontal");
  inv.vertical = multiset_from_json(field(j, "vertical"), "vertical");
  inv.jordan = jordan_from_json(field(j, "jordan"));
  as_input([&] {
    inv.check();
    return 0;
  });
  return inv;
}

Json to_json(const SkewJK& jk) {
  return {{"dim", jk.dim},
          {"rank", jk.dim - jk.kronecker.size()},
          {"kronecker", to_json(jk.kronecker)},
          {"jordan", to_json(jk.jordan)}};
}

SkewJK skew_jk_from_json(const Json& j) {
  SkewJK jk;
  jk.dim = nat(field(j, "dim"), "dim");
  jk.kronecker = multiset_from_json(field(j, "kronecker"), "kronecker");
  jk.jordan = jordan_from_json(field(j, "jordan"));
  if (j.contains("rank") && nat(j["rank"], "rank") + jk.kronecker.size() != jk.dim)
    throw InputError("rank does not match the Kronecker part");
  as_input([&] {
    jk.check();
    return 0;
  });
  return jk;
}

Json to_json(const BundleSig& s) {
  Json slots = Json::array();
  for (const auto& x : s.slots) slots.push_back(to_json(x));
  return {{"m", s.m},
          {"n", s.n},
          {"rank", s.rank},
          {"horizontal", to_json(s.horizontal)},
          {"vertical", to_json(s.vertical)},
          {"slots", slots}};
}

BundleSig bundle_sig_from_json(const Json& j) {
  BundleSig s;
  s.m = nat(field(j, "m"), "m");
  s.n = nat(field(j, "n"), "n");
  s.rank = nat(field(j, "rank"), "rank");
  s.horizontal = multiset_from_json(field(j, "horizontal"), "horizontal");
  s.vertical = multiset_from_json(field(j, "vertical"), "vertical");
  const Json& slots = field(j, "slots");
  if (!slots.is_array()) throw InputError("slots must be an array");
  for (const auto& x : slots) s.slots.push_back(multiset_from_json(x, "slot"));
  s.normalize();
  as_input([&] {
    s.check();
    return 0;
  });
  return s;
}

Json to_json(const SkewBundleSig& s) {
  Json slots = Json::array();
  for (const auto& x : s.slots) slots.push_back(to_json(x));
  return {{"dim", s.dim}, {"kronecker", to_json(s.kronecker)}, {"slots", slots}};
}

SkewBundleSig skew_bundle_sig_from_json(const Json& j) {
  SkewBundleSig s;
  s.dim = nat(field(j, "dim"), "dim");
  s.kronecker = multiset_from_json(field(j, "kronecker"), "kronecker");
  const Json& slots = field(j, "slots");
  if (!slots.is_array()) throw InputError("slots must be an array");
  for (const auto& x : slots) s.slots.push_back(multiset_from_json(x, "slot"));
  s.normalize();
  as_input([&] {
    s.check();
    return 0;
  });
  return s;
}

LieAlgebra lie_from_json(const Json& j) {
  const std::size_t dim = nat(field(j, "dim"), "dim");
  LieAlgebra g(dim);
  const Json& br = field(j, "brackets");
  if (!br.is_array()) throw InputError("brackets must be an array");
  for (const auto& b : br) {
    const std::size_t i = nat(field(b, "i"), "i"), jj = nat(field(b, "j"), "j"), k = nat(field(b, "k"), "k");
    if (i >= jj) throw InputError("brackets need i < j");
    if (k >= dim) throw InputError("bracket index out of range");
    g.add(i, jj, k, rat_from_json(field(b, "c")));
  }
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || l.size() != dim) throw InputError("labels must list one name per basis vector");
    for (const auto& s : l) {
      if (!s.is_string()) throw InputError("labels must be strings");
      g.labels.push_back(s.get<std::string>());
    }
  }
  return g;
}

Json to_json(const LieAlgebra& g) {
  Json br = Json::array();
  for (const auto& b : g.brackets()) br.push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"c", to_json(b.c)}});
  Json out{{"dim", g.dim()}, {"brackets", br}};
  if (!g.labels.empty()) out["labels"] = g.labels;
  return out;
}

Representation rep_from_json(const Json& j, const std::filesystem::path& base, const LieAlgebra* given) {
  Representation rho;
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("algebra")) {
    const Json& a = j["algebra"];
    if (a.is_string()) {
      std::filesystem::path p(a.get<std::string>());
      rho.algebra = lie_from_json(read_json_file(p.is_absolute() ? p : base / p));
    } else {
      rho.algebra = lie_from_json(a);
    }
    if (given && !(given->dim() == rho.algebra.dim() && given->brackets() == rho.algebra.brackets()))
      throw InputError("representation is over a different algebra");
  } else if (given) {
    rho.algebra = *given;
  } else {
    throw InputError("missing field \"algebra\"");
  }
  rho.dim_v = nat(field(j, "dimV"), "dimV");
  const Json& mats = field(j, "mats");
  if (!mats.is_array() || mats.size() != rho.algebra.dim())
    throw InputError("mats must hold one matrix per basis vector");
  for (const auto& m : mats) rho.mats.push_back(mat_from_json(m, rho.dim_v, rho.dim_v));
  return rho;
}

Json to_json(const Representation& rho) {
  Json mats = Json::array();
  for (const auto& m : rho.mats) mats.push_back(to_json(m));
  return {{"algebra", to_json(rho.algebra)}, {"dimV", rho.dim_v}, {"mats", mats}};
}

Json to_json(const SkewJKReport& r) {
  return {{"invariants", to_json(r.invariants)},
          {"signature", to_json(r.signature)},
          {"genericityStatus", to_string(r.status)},
          {"samplesUsed", r.samples_used},
          {"index", r.index_used},
          {"indexExact", r.index_exact}};
}

Json to_json(const RepJK& r) {
  Json out{{"invariants", to_json(r.invariants)},
           {"signature", to_json(r.signature)},
           {"genericityStatus", to_string(r.status)},
           {"samplesUsed", r.samples_used}};
  out["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const DualPrediction& p) {
  return {{"kronecker", to_json(p.kronecker)}, {"slotTotals", to_json(p.slot_totals)}};
}

Json to_json(const DualTheoremReport& r) {
  return {{"dual", to_json(r.dual)},
          {"lie", to_json(r.lie)},
          {"predicted", r.predicted ? to_json(*r.predicted) : Json(nullptr)},
          {"computed", {{"kronecker", to_json(r.computed_kronecker)}, {"slotTotals", to_json(r.computed_slot_totals)}}},
          {"verdict", to_string(r.verdict)}};
}

}  // namespace jkinv
