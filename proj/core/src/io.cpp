#include "courant/io.hpp"

#include <json.hpp>

#include <array>
#include <sstream>

#include "courant/errors.hpp"
#include "courant/version.hpp"

namespace courant {

namespace {

using nlohmann::json;

struct TensorSpec {
  std::string name;
  std::vector<std::size_t> extents;
  bool required = true;
};

std::size_t dim_of(const std::map<std::string, std::size_t>& d, const std::string& k) {
  auto it = d.find(k);
  if (it == d.end()) throw InputError("document: missing dims." + k);
  return it->second;
}

// Per-kind schema: dims keys and tensor shapes.
std::vector<std::string> kind_dims(DocKind k) {
  switch (k) {
    case DocKind::lie_algebra:
    case DocKind::leibniz:
    case DocKind::endomorphism:
    case DocKind::omni_gcs:
      return {"n"};
    case DocKind::representation:
      return {"n", "m"};
    case DocKind::crossed_module:
      return {"dim_g", "dim_m"};
    case DocKind::lie2:
      return {"dim_a0", "dim_a1"};
    case DocKind::ecourant:
    case DocKind::gcs:
      return {"dim_e", "dim_k"};
    case DocKind::subspace:
      return {"ambient", "count"};
  }
  throw InputError("document: unknown kind");
}

std::vector<TensorSpec> kind_tensors(DocKind k,
                                     const std::map<std::string, std::size_t>& d) {
  switch (k) {
    case DocKind::lie_algebra:
    case DocKind::leibniz: {
      std::size_t n = dim_of(d, "n");
      return {{"bracket", {n, n, n}}};
    }
    case DocKind::endomorphism: {
      std::size_t n = dim_of(d, "n");
      return {{"matrix", {n, n}}};
    }
    case DocKind::representation: {
      std::size_t n = dim_of(d, "n"), m = dim_of(d, "m");
      return {{"action", {n, m, m}}, {"bracket", {n, n, n}}};
    }
    case DocKind::crossed_module: {
      std::size_t g = dim_of(d, "dim_g"), m = dim_of(d, "dim_m");
      return {{"action", {g, m, m}},
              {"g_bracket", {g, g, g}},
              {"m_bracket", {m, m, m}},
              {"phi", {g, m}}};
    }
    case DocKind::lie2: {
      std::size_t a0 = dim_of(d, "dim_a0"), a1 = dim_of(d, "dim_a1");
      return {{"l1", {a0, a1}},
              {"l2_0", {a0, a0, a0}},
              {"l2_1", {a0, a1, a1}},
              {"l3", {a0, a0, a0, a1}}};
    }
    case DocKind::ecourant: {
      std::size_t k = dim_of(d, "dim_k"), e = dim_of(d, "dim_e");
      return {{"anchor", {k, e, e}}, {"bracket", {k, k, k}}, {"pairing", {k, k, e}}};
    }
    case DocKind::gcs: {
      std::size_t k = dim_of(d, "dim_k"), e = dim_of(d, "dim_e");
      return {{"J", {k, k}},
              {"anchor", {k, e, e}},
              {"bracket", {k, k, k}},
              {"pairing", {k, k, e}}};
    }
    case DocKind::omni_gcs: {
      std::size_t n = dim_of(d, "n");
      return {{"D", {n, n}},
              {"pi", {n, n, n}},
              {"sigma", {n * n, n * n, n}, /*required=*/false}};
    }
    case DocKind::subspace: {
      std::size_t a = dim_of(d, "ambient"), c = dim_of(d, "count");
      return {{"basis", {c, a}}};
    }
  }
  throw InputError("document: unknown kind");
}

std::size_t extent_product(const std::vector<std::size_t>& e) {
  std::size_t p = 1;
  for (std::size_t x : e) p *= x;
  return p;
}

const std::array<std::pair<DocKind, const char*>, 10> kKindNames = {{
    {DocKind::lie_algebra, "lie_algebra"},
    {DocKind::leibniz, "leibniz"},
    {DocKind::representation, "representation"},
    {DocKind::crossed_module, "crossed_module"},
    {DocKind::lie2, "lie2"},
    {DocKind::ecourant, "ecourant"},
    {DocKind::gcs, "gcs"},
    {DocKind::omni_gcs, "omni_gcs"},
    {DocKind::subspace, "subspace"},
    {DocKind::endomorphism, "endomorphism"},
}};

} // namespace

std::string kind_name(DocKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  throw InputError("unknown document kind");
}

DocKind parse_kind(const std::string& name) {
  for (const auto& [kind, kname] : kKindNames)
    if (name == kname) return kind;
  throw InputError("document: unknown kind \"" + name + "\"");
}

StructureDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("document: malformed JSON at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
  if (!root.is_object()) throw InputError("document: top level must be an object");

  StructureDocument doc;
  if (!root.contains("kind") || !root["kind"].is_string())
    throw InputError("document: missing string field \"kind\"");
  doc.kind = parse_kind(root["kind"].get<std::string>());

  if (root.contains("scalar_field")) {
    std::string f = root["scalar_field"].get<std::string>();
    if (f == "rational")
      doc.scalar_field = Field::rational;
    else if (f == "gaussian")
      doc.scalar_field = Field::gaussian;
    else
      throw InputError("document: scalar_field must be \"rational\" or \"gaussian\"");
  }

  if (!root.contains("dims") || !root["dims"].is_object())
    throw InputError("document: missing object field \"dims\"");
  for (const auto& [key, value] : root["dims"].items()) {
    if (!value.is_number_unsigned())
      throw InputError("document: dims." + key + " must be a nonnegative integer");
    doc.dims[key] = value.get<std::size_t>();
  }
  for (const std::string& need : kind_dims(doc.kind))
    if (!doc.dims.count(need))
      throw InputError("document: missing dims." + need + " for kind " +
                       kind_name(doc.kind));

  if (!root.contains("tensors") || !root["tensors"].is_object())
    throw InputError("document: missing object field \"tensors\"");

  std::vector<TensorSpec> specs = kind_tensors(doc.kind, doc.dims);
  for (const auto& [key, value] : root["tensors"].items()) {
    const TensorSpec* spec = nullptr;
    for (const TensorSpec& s : specs)
      if (s.name == key) spec = &s;
    if (!spec)
      throw InputError("document: tensors." + key + " is not a tensor of kind " +
                       kind_name(doc.kind));
    if (!value.is_array())
      throw InputError("document: tensors." + key + " must be a flat array");
    std::size_t want = extent_product(spec->extents);
    if (value.size() != want)
      throw InputError("document: tensors." + key + " has " +
                       std::to_string(value.size()) + " entries, expected " +
                       std::to_string(want));
    std::vector<Scalar> entries;
    entries.reserve(want);
    for (std::size_t i = 0; i < value.size(); ++i) {
      const json& cell = value[i];
      std::string where = "tensors." + key + "[" + std::to_string(i) + "]";
      if (!cell.is_string())
        throw InputError("document: " + where + " must be a scalar string");
      std::optional<Scalar> s = Scalar::parse(cell.get<std::string>());
      if (!s)
        throw InputError("document: non-canonical scalar at " + where + ": \"" +
                         cell.get<std::string>() + "\"");
      if (doc.scalar_field == Field::rational && !s->is_real())
        throw InputError("document: " + where +
                         " has an imaginary part in a rational document");
      entries.push_back(*s);
    }
    doc.tensors[key] = std::move(entries);
  }
  for (const TensorSpec& s : specs)
    if (s.required && !doc.tensors.count(s.name))
      throw InputError("document: missing tensors." + s.name + " for kind " +
                       kind_name(doc.kind));
  return doc;
}

std::string serialize(const StructureDocument& doc) {
  json root;  // nlohmann::json keeps keys sorted
  root["kind"] = kind_name(doc.kind);
  root["scalar_field"] = doc.scalar_field == Field::rational ? "rational" : "gaussian";
  root["dims"] = json::object();
  for (const auto& [k, v] : doc.dims) root["dims"][k] = v;
  root["tensors"] = json::object();
  for (const auto& [k, entries] : doc.tensors) {
    json arr = json::array();
    for (const Scalar& s : entries) arr.push_back(s.str());
    root["tensors"][k] = std::move(arr);
  }
  return root.dump(2) + "\n";
}

namespace {

Tensor3 tensor3_from(const std::vector<Scalar>& entries, std::size_t d0,
                     std::size_t d1, std::size_t d2) {
  Tensor3 t(d0, d1, d2);
  t.a = entries;
  return t;
}

Tensor4 tensor4_from(const std::vector<Scalar>& entries, std::size_t d0,
                     std::size_t d1, std::size_t d2, std::size_t d3) {
  Tensor4 t(d0, d1, d2, d3);
  t.a = entries;
  return t;
}

Matrix matrix_from(const std::vector<Scalar>& entries, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  m.a = entries;
  return m;
}

void require_kind(const StructureDocument& doc, DocKind a) {
  if (doc.kind != a)
    throw InputError("document: expected kind " + kind_name(a) + ", got " +
                     kind_name(doc.kind));
}

} // namespace

LieAlgebra to_lie_algebra(const StructureDocument& doc) {
  if (doc.kind != DocKind::lie_algebra && doc.kind != DocKind::leibniz)
    throw InputError("document: expected a lie_algebra or leibniz document");
  std::size_t n = doc.dims.at("n");
  return LieAlgebra(n, tensor3_from(doc.tensors.at("bracket"), n, n, n));
}

LeibnizAlgebra to_leibniz(const StructureDocument& doc) {
  LieAlgebra l = to_lie_algebra(doc);
  return LeibnizAlgebra(l.dim, l.bracket);
}

Representation to_representation(const StructureDocument& doc) {
  require_kind(doc, DocKind::representation);
  std::size_t n = doc.dims.at("n"), m = doc.dims.at("m");
  Representation r;
  r.algebra = LieAlgebra(n, tensor3_from(doc.tensors.at("bracket"), n, n, n));
  r.module_dim = m;
  r.action = tensor3_from(doc.tensors.at("action"), n, m, m);
  return r;
}

Endomorphism to_endomorphism(const StructureDocument& doc) {
  require_kind(doc, DocKind::endomorphism);
  std::size_t n = doc.dims.at("n");
  return Endomorphism(matrix_from(doc.tensors.at("matrix"), n, n));
}

CrossedModule to_crossed_module(const StructureDocument& doc) {
  require_kind(doc, DocKind::crossed_module);
  std::size_t g = doc.dims.at("dim_g"), m = doc.dims.at("dim_m");
  CrossedModule cm;
  cm.g = LieAlgebra(g, tensor3_from(doc.tensors.at("g_bracket"), g, g, g));
  cm.m = LieAlgebra(m, tensor3_from(doc.tensors.at("m_bracket"), m, m, m));
  cm.phi = matrix_from(doc.tensors.at("phi"), g, m);
  cm.act = tensor3_from(doc.tensors.at("action"), g, m, m);
  return cm;
}

LieTwoAlgebra to_lie_two(const StructureDocument& doc) {
  require_kind(doc, DocKind::lie2);
  std::size_t a0 = doc.dims.at("dim_a0"), a1 = doc.dims.at("dim_a1");
  LieTwoAlgebra t;
  t.dim_a0 = a0;
  t.dim_a1 = a1;
  t.l1 = matrix_from(doc.tensors.at("l1"), a0, a1);
  t.l2_0 = tensor3_from(doc.tensors.at("l2_0"), a0, a0, a0);
  t.l2_1 = tensor3_from(doc.tensors.at("l2_1"), a0, a1, a1);
  t.l3 = tensor4_from(doc.tensors.at("l3"), a0, a0, a0, a1);
  return t;
}

ECourantStructure to_ecourant(const StructureDocument& doc) {
  if (doc.kind != DocKind::ecourant && doc.kind != DocKind::gcs)
    throw InputError("document: expected an ecourant or gcs document");
  std::size_t k = doc.dims.at("dim_k"), e = doc.dims.at("dim_e");
  ECourantStructure c;
  c.dim_k = k;
  c.dim_e = e;
  c.bracket = tensor3_from(doc.tensors.at("bracket"), k, k, k);
  c.pairing = tensor3_from(doc.tensors.at("pairing"), k, k, e);
  c.anchor = tensor3_from(doc.tensors.at("anchor"), k, e, e);
  c.field = doc.scalar_field;
  return c;
}

Matrix gcs_j(const StructureDocument& doc) {
  require_kind(doc, DocKind::gcs);
  std::size_t k = doc.dims.at("dim_k");
  return matrix_from(doc.tensors.at("J"), k, k);
}

OmniGcsData to_omni_gcs(const StructureDocument& doc) {
  require_kind(doc, DocKind::omni_gcs);
  std::size_t n = doc.dims.at("n");
  OmniGcsData d;
  d.pi = tensor3_from(doc.tensors.at("pi"), n, n, n);
  d.d = matrix_from(doc.tensors.at("D"), n, n);
  if (doc.tensors.count("sigma"))
    d.sigma = tensor3_from(doc.tensors.at("sigma"), n * n, n * n, n);
  return d;
}

Subspace to_subspace(const StructureDocument& doc) {
  require_kind(doc, DocKind::subspace);
  std::size_t a = doc.dims.at("ambient"), count = doc.dims.at("count");
  Subspace s;
  s.ambient = a;
  const std::vector<Scalar>& entries = doc.tensors.at("basis");
  for (std::size_t r = 0; r < count; ++r)
    s.basis.emplace_back(entries.begin() + r * a, entries.begin() + (r + 1) * a);
  return s;
}

namespace {

bool all_real(const std::vector<Scalar>& v) {
  for (const Scalar& s : v)
    if (!s.is_real()) return false;
  return true;
}

Field field_of(std::initializer_list<const std::vector<Scalar>*> tensors) {
  for (const std::vector<Scalar>* t : tensors)
    if (!all_real(*t)) return Field::gaussian;
  return Field::rational;
}

} // namespace

StructureDocument document_of(const LieAlgebra& l) {
  StructureDocument doc;
  doc.kind = DocKind::lie_algebra;
  doc.dims["n"] = l.dim;
  doc.tensors["bracket"] = l.bracket.a;
  doc.scalar_field = field_of({&l.bracket.a});
  return doc;
}

StructureDocument document_of(const LeibnizAlgebra& l) {
  StructureDocument doc;
  doc.kind = DocKind::leibniz;
  doc.dims["n"] = l.dim;
  doc.tensors["bracket"] = l.bracket.a;
  doc.scalar_field = field_of({&l.bracket.a});
  return doc;
}

StructureDocument document_of(const Representation& r) {
  StructureDocument doc;
  doc.kind = DocKind::representation;
  doc.dims["n"] = r.algebra.dim;
  doc.dims["m"] = r.module_dim;
  doc.tensors["bracket"] = r.algebra.bracket.a;
  doc.tensors["action"] = r.action.a;
  doc.scalar_field = field_of({&r.algebra.bracket.a, &r.action.a});
  return doc;
}

StructureDocument document_of(const Endomorphism& e) {
  StructureDocument doc;
  doc.kind = DocKind::endomorphism;
  doc.dims["n"] = e.dim;
  doc.tensors["matrix"] = e.m.a;
  doc.scalar_field = field_of({&e.m.a});
  return doc;
}

StructureDocument document_of(const CrossedModule& cm) {
  StructureDocument doc;
  doc.kind = DocKind::crossed_module;
  doc.dims["dim_g"] = cm.g.dim;
  doc.dims["dim_m"] = cm.m.dim;
  doc.tensors["g_bracket"] = cm.g.bracket.a;
  doc.tensors["m_bracket"] = cm.m.bracket.a;
  doc.tensors["phi"] = cm.phi.a;
  doc.tensors["action"] = cm.act.a;
  doc.scalar_field =
      field_of({&cm.g.bracket.a, &cm.m.bracket.a, &cm.phi.a, &cm.act.a});
  return doc;
}

StructureDocument document_of(const LieTwoAlgebra& t) {
  StructureDocument doc;
  doc.kind = DocKind::lie2;
  doc.dims["dim_a0"] = t.dim_a0;
  doc.dims["dim_a1"] = t.dim_a1;
  doc.tensors["l1"] = t.l1.a;
  doc.tensors["l2_0"] = t.l2_0.a;
  doc.tensors["l2_1"] = t.l2_1.a;
  doc.tensors["l3"] = t.l3.a;
  doc.scalar_field = field_of({&t.l1.a, &t.l2_0.a, &t.l2_1.a, &t.l3.a});
  return doc;
}

StructureDocument document_of(const ECourantStructure& c) {
  StructureDocument doc;
  doc.kind = DocKind::ecourant;
  doc.dims["dim_k"] = c.dim_k;
  doc.dims["dim_e"] = c.dim_e;
  doc.tensors["bracket"] = c.bracket.a;
  doc.tensors["pairing"] = c.pairing.a;
  doc.tensors["anchor"] = c.anchor.a;
  doc.scalar_field = c.field;
  return doc;
}

StructureDocument document_of_gcs(const ECourantStructure& c, const Matrix& j) {
  StructureDocument doc = document_of(c);
  doc.kind = DocKind::gcs;
  doc.tensors["J"] = j.a;
  if (!all_real(j.a)) doc.scalar_field = Field::gaussian;
  return doc;
}

StructureDocument document_of_omni_gcs(std::size_t n, const OmniGcsData& d) {
  StructureDocument doc;
  doc.kind = DocKind::omni_gcs;
  doc.dims["n"] = n;
  doc.tensors["pi"] = d.pi.a;
  doc.tensors["D"] = d.d.a;
  if (!d.sigma.a.empty()) doc.tensors["sigma"] = d.sigma.a;
  doc.scalar_field = field_of({&d.pi.a, &d.d.a});
  return doc;
}

StructureDocument document_of_subspace(const Subspace& s, Field field) {
  StructureDocument doc;
  doc.kind = DocKind::subspace;
  doc.dims["ambient"] = s.ambient;
  doc.dims["count"] = s.basis.size();
  std::vector<Scalar> flat;
  flat.reserve(s.ambient * s.basis.size());
  for (const Vec& v : s.basis) flat.insert(flat.end(), v.begin(), v.end());
  doc.tensors["basis"] = std::move(flat);
  doc.scalar_field = field;
  return doc;
}

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string render_report(const CheckReport& report, const std::string& digest,
                          ReportFormat format) {
  if (format == ReportFormat::json) {
    json root;
    json checks = json::array();
    for (const CheckEntry& e : report.entries) {
      json entry;
      entry["id"] = e.id;
      entry["pass"] = e.pass;
      if (e.witness) {
        json w;
        w["indices"] = e.witness->indices;
        json defect = json::array();
        for (const Scalar& s : e.witness->defect) defect.push_back(s.str());
        w["defect"] = std::move(defect);
        entry["witness"] = std::move(w);
      }
      checks.push_back(std::move(entry));
    }
    root["checks"] = std::move(checks);
    json notes = json::array();
    for (const auto& [k, v] : report.notes) notes.push_back(json::array({k, v}));
    root["notes"] = std::move(notes);
    root["overall_pass"] = report.passed();
    root["input_digest"] = digest;
    root["tool_version"] = kToolVersion;
    return root.dump(2) + "\n";
  }

  std::ostringstream os;
  for (const CheckEntry& e : report.entries) {
    os << (e.pass ? "PASS " : "FAIL ") << e.id;
    if (e.witness) {
      os << " at (";
      for (std::size_t i = 0; i < e.witness->indices.size(); ++i)
        os << (i ? "," : "") << e.witness->indices[i];
      os << ") defect [";
      for (std::size_t i = 0; i < e.witness->defect.size(); ++i)
        os << (i ? "," : "") << e.witness->defect[i].str();
      os << "]";
    }
    os << "\n";
  }
  for (const auto& [k, v] : report.notes) os << "note " << k << " = " << v << "\n";
  os << "input " << digest << "\n";
  os << "OVERALL " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Tensor3 pi_preset(const std::string& name, std::size_t n) {
  if (name == "zero") return Tensor3(n, n, n);
  if (name == "aff1") {
    if (n != 2) throw InputError("preset aff1 needs n = 2");
    return aff1().bracket;
  }
  throw InputError("unknown pi preset \"" + name + "\" (try zero, aff1)");
}

Matrix d_preset(const std::string& name, std::size_t n) {
  if (name == "rot2") {
    if (n != 2) throw InputError("preset rot2 needs n = 2");
    Matrix d(2, 2);
    d.at(0, 1) = Scalar(-1);
    d.at(1, 0) = Scalar(1);
    return d;
  }
  if (name == "zero") return Matrix::zero(n, n);
  throw InputError("unknown D preset \"" + name + "\" (try rot2, zero)");
}

Tensor4 l3_preset(const std::string& name, std::size_t n0, std::size_t n1) {
  if (name == "det3") {
    if (n0 != 3 || n1 != 1) throw InputError("preset det3 needs dim_a0 = 3, dim_a1 = 1");
    Tensor4 t(3, 3, 3, 1);
    int eps[3][3][3] = {};
    eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
    eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          t.at(i, j, k, 0) = Scalar(eps[i][j][k]);
    return t;
  }
  if (name == "zero") return Tensor4(n0, n0, n0, n1);
  throw InputError("unknown l3 preset \"" + name + "\" (try det3, zero)");
}

Tensor3 action_preset(const std::string& name, const LieAlgebra& g,
                      std::size_t module_dim) {
  if (name == "ad") {
    if (module_dim != g.dim) throw InputError("preset ad needs module dim = dim g");
    return adjoint_rep(g).action;
  }
  if (name == "zero") return Tensor3(g.dim, module_dim, module_dim);
  throw InputError("unknown action preset \"" + name + "\" (try ad, zero)");
}

} // namespace courant
