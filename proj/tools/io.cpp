#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace deligne::io {

namespace {

using Pointer = Json::json_pointer;

/// Input iterator over a buffer that counts the newlines consumed so far.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, int* line) : p_(p), line_(line) {}
  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    if (*p_ == '\n') ++*line_;
    ++p_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_ = nullptr;
  int* line_ = nullptr;
};

std::string escape_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// Records the line of every key and value, keyed by JSON pointer string.
class LineRecorder {
 public:
  explicit LineRecorder(const int* line) : line_(line) {}
  std::map<std::string, int> lines;

  bool null() { return scalar(); }
  bool boolean(bool) { return scalar(); }
  bool number_integer(Json::number_integer_t) { return scalar(); }
  bool number_unsigned(Json::number_unsigned_t) { return scalar(); }
  bool number_float(Json::number_float_t, const Json::string_t&) { return scalar(); }
  bool string(Json::string_t&) { return scalar(); }
  bool binary(Json::binary_t&) { return scalar(); }
  bool start_object(std::size_t) { return open(false); }
  bool start_array(std::size_t) { return open(true); }
  bool end_object() { return close(); }
  bool end_array() { return close(); }
  bool key(Json::string_t& k) {
    frames_.back().key = k;
    lines.emplace(path_ + "/" + escape_token(k), *line_);
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) { return false; }

 private:
  struct Frame {
    bool array = false;
    std::size_t next = 0;
    std::string key;
  };

  std::string child() const {
    if (frames_.empty()) return "";
    const Frame& f = frames_.back();
    return path_ + "/" + (f.array ? std::to_string(f.next) : escape_token(f.key));
  }
  void finished() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().next;
  }
  bool scalar() {
    lines.emplace(child(), *line_);
    finished();
    return true;
  }
  bool open(bool array) {
    const std::string p = child();
    lines.emplace(p, *line_);
    saved_.push_back(path_);
    path_ = p;
    frames_.push_back({array, 0, {}});
    return true;
  }
  bool close() {
    frames_.pop_back();
    path_ = saved_.back();
    saved_.pop_back();
    finished();
    return true;
  }

  const int* line_;
  std::string path_;
  std::vector<std::string> saved_;
  std::vector<Frame> frames_;
};

/// Typed field access with errors that name the offending field.
class Reader {
 public:
  explicit Reader(const Document& doc) : doc_(doc) {}
  const Document& doc() const { return doc_; }

  const Json& at(const Pointer& p) const { return doc_.root().at(p); }

  void expect_object(const Pointer& p, std::initializer_list<const char*> required,
                     std::initializer_list<const char*> optional = {}) const {
    const Json& j = at(p);
    if (!j.is_object()) doc_.fail(p, "expected an object");
    for (const auto& [k, v] : j.items()) {
      const bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                         std::any_of(optional.begin(), optional.end(), [&](const char* r) { return k == r; });
      if (!known) doc_.fail(p / k, "unknown field");
    }
    for (const char* k : required)
      if (!j.contains(k)) doc_.fail(p, std::string("missing field \"") + k + "\"");
  }
  const Json& array(const Pointer& p) const {
    const Json& j = at(p);
    if (!j.is_array()) doc_.fail(p, "expected an array");
    return j;
  }
  std::string string(const Pointer& p) const {
    const Json& j = at(p);
    if (!j.is_string()) doc_.fail(p, "expected a string");
    return j.get<std::string>();
  }
  int integer(const Pointer& p) const {
    const Json& j = at(p);
    if (!j.is_number_integer()) doc_.fail(p, "expected an integer");
    return j.get<int>();
  }
  bool boolean(const Pointer& p) const {
    const Json& j = at(p);
    if (!j.is_boolean()) doc_.fail(p, "expected true or false");
    return j.get<bool>();
  }
  Scalar scalar(const Pointer& p) const {
    const Json& j = at(p);
    if (!j.is_string()) doc_.fail(p, "expected a rational as a string \"p/q\"");
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      doc_.fail(p, e.what());
    }
  }
  IndexSet index_set(const Pointer& p, int opens) const {
    IndexSet s;
    const Json& j = array(p);
    for (std::size_t i = 0; i < j.size(); ++i) {
      const int v = integer(p / i);
      if (v < 0 || v >= opens) doc_.fail(p / i, "index out of range");
      if (!s.empty() && s.back() >= v) doc_.fail(p / i, "index sets must be strictly increasing");
      s.push_back(v);
    }
    if (s.empty()) doc_.fail(p, "index sets must be nonempty");
    return s;
  }
  Matrix matrix(const Pointer& p, std::size_t rows, std::size_t cols) const {
    const Json& j = at(p);
    if (j.is_string()) {
      if (j.get<std::string>() != "identity") doc_.fail(p, "expected \"identity\" or an array of rows");
      if (rows != cols) doc_.fail(p, "identity needs a square shape, expected " + shape(rows, cols));
      return Matrix::identity(rows);
    }
    if (!j.is_array() || j.size() != rows) doc_.fail(p, "expected " + std::to_string(rows) + " rows (shape " + shape(rows, cols) + ")");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Json& row = array(p / r);
      if (row.size() != cols) doc_.fail(p / r, "expected " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(p / r / c);
    }
    return m;
  }

 private:
  static std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }
  const Document& doc_;
};

void expect_kind(const Reader& rd, const Pointer& p, const std::string& kind) {
  if (rd.string(p / "kind") != kind) rd.doc().fail(p / "kind", "expected \"" + kind + "\"");
}

std::size_t lookup(const Reader& rd, const Pointer& p, const std::vector<BasisElement>& basis) {
  const std::string label = rd.string(p);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].label == label) return i;
  rd.doc().fail(p, "unknown basis label \"" + label + "\"");
}

LieRecord parse_lie(const Reader& rd, const Pointer& p) {
  rd.expect_object(p, {"kind", "name", "basis", "differential", "bracket"});
  expect_kind(rd, p, "dg_lie");
  LieRecord r;
  r.name = rd.string(p / "name");
  std::vector<BasisElement> basis;
  const Json& jb = rd.array(p / "basis");
  for (std::size_t i = 0; i < jb.size(); ++i) {
    rd.expect_object(p / "basis" / i, {"label", "degree"});
    basis.push_back({rd.string(p / "basis" / i / "label"), rd.integer(p / "basis" / i / "degree")});
    if (basis.back().degree < 0) rd.doc().fail(p / "basis" / i / "degree", "degrees must be non-negative");
  }
  const std::size_t n = basis.size();
  Matrix d(n, n);
  const Json& jd = rd.array(p / "differential");
  for (std::size_t e = 0; e < jd.size(); ++e) {
    const Pointer q = p / "differential" / e;
    rd.expect_object(q, {"source", "target", "coeff"});
    const std::size_t s = lookup(rd, q / "source", basis), t = lookup(rd, q / "target", basis);
    if (sgn(d(t, s)) != 0) rd.doc().fail(q, "duplicate differential entry");
    d(t, s) = rd.scalar(q / "coeff");
  }
  // Entries give [left, right]; the graded antisymmetric partner is implied.
  StructureConstants br(n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  const Json& jbr = rd.array(p / "bracket");
  for (std::size_t e = 0; e < jbr.size(); ++e) {
    const Pointer q = p / "bracket" / e;
    rd.expect_object(q, {"left", "right", "result", "coeff"});
    const std::size_t i = lookup(rd, q / "left", basis), j = lookup(rd, q / "right", basis);
    const std::size_t k = lookup(rd, q / "result", basis);
    if (!seen.insert({i, j, k}).second || (i != j && seen.count({j, i, k}) != 0)) {
      rd.doc().fail(q, "bracket entry repeats an earlier one (the antisymmetric partner is implied)");
    }
    const Scalar c = rd.scalar(q / "coeff");
    br.add(i, j, k, c);
    if (i != j) br.add(j, i, k, (basis[i].degree * basis[j].degree) % 2 == 0 ? Scalar(-c) : c);
  }
  try {
    r.algebra = DgLieAlgebra(std::move(basis), std::move(d), std::move(br), Check::kNone);
  } catch (const std::invalid_argument& e) {
    rd.doc().fail(p / "basis", e.what());
  }
  return r;
}

ArtinRecord parse_artin(const Reader& rd, const Pointer& p) {
  rd.expect_object(p, {"kind", "name", "basis", "unit", "product"});
  expect_kind(rd, p, "artin");
  ArtinRecord r;
  r.name = rd.string(p / "name");
  const Json& jb = rd.array(p / "basis");
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    r.labels.push_back(rd.string(p / "basis" / i));
    basis.push_back({r.labels.back(), 0});
  }
  r.unit = lookup(rd, p / "unit", basis);
  const std::size_t n = basis.size();
  // Products with the unit and the symmetric partner are implied.
  r.product = StructureConstants(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.product.add(r.unit, i, i, 1);
    if (i != r.unit) r.product.add(i, r.unit, i, 1);
  }
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  const Json& jp = rd.array(p / "product");
  for (std::size_t e = 0; e < jp.size(); ++e) {
    const Pointer q = p / "product" / e;
    rd.expect_object(q, {"left", "right", "result", "coeff"});
    const std::size_t i = lookup(rd, q / "left", basis), j = lookup(rd, q / "right", basis);
    const std::size_t k = lookup(rd, q / "result", basis);
    if (i == r.unit || j == r.unit) rd.doc().fail(q, "products with the unit are implied");
    if (!seen.insert({std::min(i, j), std::max(i, j), k}).second) rd.doc().fail(q, "product entry repeats an earlier one");
    const Scalar c = rd.scalar(q / "coeff");
    r.product.add(i, j, k, c);
    if (i != j) r.product.add(j, i, k, c);
  }
  return r;
}

std::vector<LieRecord> parse_algebra_table(const Reader& rd, const Pointer& p) {
  const Json& j = rd.at(p);
  if (!j.is_object() || j.empty()) rd.doc().fail(p, "expected a nonempty object of named algebra records");
  std::vector<LieRecord> out;
  for (const auto& [key, v] : j.items()) {
    out.push_back(parse_lie(rd, p / key));
    if (out.back().name != key) rd.doc().fail(p / key / "name", "name must match the reference \"" + key + "\"");
  }
  return out;
}

const DgLieAlgebra& find_algebra(const Reader& rd, const Pointer& p, const std::vector<LieRecord>& table) {
  const std::string ref = rd.string(p);
  for (const auto& a : table)
    if (a.name == ref) return a.algebra;
  rd.doc().fail(p, "unknown algebra reference \"" + ref + "\"");
}

CoverRecord parse_cover(const Reader& rd, const Pointer& p) {
  rd.expect_object(p, {"kind", "name", "opens", "algebras", "intersections", "restrictions"});
  expect_kind(rd, p, "cover");
  CoverRecord r;
  r.name = rd.string(p / "name");
  r.opens = rd.integer(p / "opens");
  if (r.opens <= 0) rd.doc().fail(p / "opens", "a cover needs at least one open");
  r.algebras = parse_algebra_table(rd, p / "algebras");
  std::map<IndexSet, std::size_t> dims;
  const Json& ji = rd.array(p / "intersections");
  for (std::size_t e = 0; e < ji.size(); ++e) {
    const Pointer q = p / "intersections" / e;
    rd.expect_object(q, {"set", "nonempty"}, {"sections"});
    CoverRecord::Intersection in;
    in.set = rd.index_set(q / "set", r.opens);
    in.nonempty = rd.boolean(q / "nonempty");
    if (in.nonempty) {
      if (!rd.at(q).contains("sections")) rd.doc().fail(q, "missing field \"sections\" for a nonempty intersection");
      in.sections = rd.string(q / "sections");
      if (!dims.emplace(in.set, find_algebra(rd, q / "sections", r.algebras).dim()).second) rd.doc().fail(q / "set", "intersection listed twice");
    } else if (rd.at(q).contains("sections")) {
      rd.doc().fail(q / "sections", "an empty intersection carries no sections");
    }
    r.intersections.push_back(std::move(in));
  }
  for (const auto& in : r.intersections)
    if (!in.nonempty && dims.count(in.set)) rd.doc().fail(p / "intersections", "intersection both empty and nonempty");
  const Json& jr = rd.array(p / "restrictions");
  for (std::size_t e = 0; e < jr.size(); ++e) {
    const Pointer q = p / "restrictions" / e;
    rd.expect_object(q, {"from", "add", "matrix"});
    CoverRecord::Restriction res;
    res.from = rd.index_set(q / "from", r.opens);
    res.add = rd.integer(q / "add");
    if (res.add < 0 || res.add >= r.opens || std::binary_search(res.from.begin(), res.from.end(), res.add)) {
      rd.doc().fail(q / "add", "index must be a valid open outside \"from\"");
    }
    IndexSet to = res.from;
    to.insert(std::lower_bound(to.begin(), to.end(), res.add), res.add);
    if (!dims.count(res.from)) rd.doc().fail(q / "from", "restriction from an intersection without sections");
    if (!dims.count(to)) rd.doc().fail(q / "add", "restriction into an intersection without sections");
    res.matrix = rd.matrix(q / "matrix", dims.at(to), dims.at(res.from));
    r.restrictions.push_back(std::move(res));
  }
  return r;
}

CosimplicialRecord parse_cosimplicial(const Reader& rd, const Pointer& p) {
  rd.expect_object(p, {"kind", "name", "algebras", "levels", "cofaces", "codegeneracies"});
  expect_kind(rd, p, "cosimplicial");
  CosimplicialRecord r;
  r.name = rd.string(p / "name");
  r.algebras = parse_algebra_table(rd, p / "algebras");
  std::vector<std::size_t> dims;
  const Json& jl = rd.array(p / "levels");
  if (jl.empty()) rd.doc().fail(p / "levels", "at least one level is required");
  for (std::size_t q = 0; q < jl.size(); ++q) {
    r.levels.push_back(rd.string(p / "levels" / q));
    dims.push_back(find_algebra(rd, p / "levels" / q, r.algebras).dim());
  }
  const int top = static_cast<int>(jl.size()) - 1;
  auto parse_maps = [&](const char* field, bool coface) {
    std::vector<CosimplicialRecord::Map> out;
    std::set<std::pair<int, int>> seen;
    const Json& jm = rd.array(p / field);
    for (std::size_t e = 0; e < jm.size(); ++e) {
      const Pointer q = p / field / e;
      rd.expect_object(q, {"level", "index", "matrix"});
      CosimplicialRecord::Map m;
      m.level = rd.integer(q / "level");
      m.index = rd.integer(q / "index");
      const bool level_ok = coface ? (m.level >= 1 && m.level <= top) : (m.level >= 0 && m.level < top);
      if (!level_ok) rd.doc().fail(q / "level", "level out of range");
      if (m.index < 0 || m.index > m.level) rd.doc().fail(q / "index", "index out of range");
      if (!seen.insert({m.level, m.index}).second) rd.doc().fail(q, "map listed twice");
      const std::size_t src = dims[static_cast<std::size_t>(coface ? m.level - 1 : m.level + 1)];
      m.matrix = rd.matrix(q / "matrix", dims[static_cast<std::size_t>(m.level)], src);
      out.push_back(std::move(m));
    }
    const std::size_t expected = coface ? static_cast<std::size_t>((top * (top + 3)) / 2)
                                        : static_cast<std::size_t>((top * (top + 1)) / 2);
    if (out.size() != expected) rd.doc().fail(p / field, "expected " + std::to_string(expected) + " maps");
    return out;
  };
  r.cofaces = parse_maps("cofaces", true);
  r.codegeneracies = parse_maps("codegeneracies", false);
  return r;
}

Record parse_at(const Reader& rd, const Pointer& p) {
  const Json& j = rd.at(p);
  if (!j.is_object()) rd.doc().fail(p, "expected a record object");
  if (!j.contains("kind")) rd.doc().fail(p, "missing field \"kind\"");
  const std::string k = rd.string(p / "kind");
  if (k == "dg_lie") return parse_lie(rd, p);
  if (k == "artin") return parse_artin(rd, p);
  if (k == "cover") return parse_cover(rd, p);
  if (k == "cosimplicial") return parse_cosimplicial(rd, p);
  if (k == "tensor") {
    rd.expect_object(p, {"kind", "name", "base", "lie"});
    return TensorRecord{rd.string(p / "name"), parse_artin(rd, p / "base"), parse_lie(rd, p / "lie")};
  }
  if (k == "deformation") {
    rd.expect_object(p, {"kind", "name", "base", "cover"});
    return DeformationRecord{rd.string(p / "name"), parse_artin(rd, p / "base"), parse_cover(rd, p / "cover")};
  }
  rd.doc().fail(p / "kind", "unknown record kind \"" + k + "\"");
}

Json terms_to_json(const std::vector<std::string>& labels, const StructureConstants& s, std::size_t i, std::size_t j) {
  Json out = Json::array();
  SparseVector terms = s.at(i, j);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  for (const auto& t : terms) {
    if (sgn(t.coeff) == 0) continue;
    out.push_back({{"left", labels[i]}, {"right", labels[j]}, {"result", labels[t.index]}, {"coeff", to_string(t.coeff)}});
  }
  return out;
}

Json algebra_table(const std::vector<LieRecord>& table) {
  Json out = Json::object();
  for (const auto& a : table) out[a.name] = to_json(a);
  return out;
}

Json index_set_json(const IndexSet& s) { return Json(s); }

}  // namespace

Document Document::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str(), path);
}

Document Document::from_string(const std::string& text, std::string name) {
  Document doc;
  doc.name_ = std::move(name);
  try {
    doc.root_ = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(doc.name_, line, "", what);
  }
  int line = 1;
  LineRecorder rec(&line);
  Json::sax_parse(CountingIterator(text.data(), &line), CountingIterator(text.data() + text.size(), &line), &rec);
  doc.lines_ = std::move(rec.lines);
  return doc;
}

int Document::line(const Json::json_pointer& p) const {
  Json::json_pointer q = p;
  while (true) {
    auto it = lines_.find(q.to_string());
    if (it != lines_.end()) return it->second;
    if (q.empty()) return 1;
    q = q.parent_pointer();
  }
}

void Document::fail(const Json::json_pointer& p, const std::string& message) const {
  throw ParseError(name_, line(p), p.to_string(), message);
}

ArtinAlgebra ArtinRecord::build() const { return ArtinAlgebra(labels, unit, product); }

ArtinRecord ArtinRecord::from(std::string name, const ArtinAlgebra& a) {
  ArtinRecord r;
  r.name = std::move(name);
  for (const auto& b : a.algebra().basis()) r.labels.push_back(b.label);
  r.unit = a.unit();
  r.product = a.algebra().structure();
  return r;
}

CoverSpec CoverRecord::build() const {
  CoverSpec c(opens);
  for (const auto& in : intersections) {
    if (!in.nonempty) continue;
    auto it = std::find_if(algebras.begin(), algebras.end(), [&](const LieRecord& a) { return a.name == in.sections; });
    if (it == algebras.end()) throw std::invalid_argument("unknown algebra reference \"" + in.sections + "\"");
    c.set_sections(in.set, it->algebra);
  }
  for (const auto& r : restrictions) c.set_restriction(r.from, r.add, r.matrix);
  return c;
}

CosimplicialDgLie CosimplicialRecord::build(Check check) const {
  std::vector<DgLieAlgebra> lv;
  for (const auto& ref : levels) {
    auto it = std::find_if(algebras.begin(), algebras.end(), [&](const LieRecord& a) { return a.name == ref; });
    if (it == algebras.end()) throw std::invalid_argument("unknown algebra reference \"" + ref + "\"");
    lv.push_back(it->algebra);
  }
  const std::size_t top = levels.size() - 1;
  std::vector<std::vector<Matrix>> cof(top + 1), cod(top);
  for (std::size_t q = 1; q <= top; ++q) cof[q].resize(q + 1);
  for (std::size_t q = 0; q < top; ++q) cod[q].resize(q + 1);
  for (const auto& m : cofaces) cof[static_cast<std::size_t>(m.level)][static_cast<std::size_t>(m.index)] = m.matrix;
  for (const auto& m : codegeneracies) cod[static_cast<std::size_t>(m.level)][static_cast<std::size_t>(m.index)] = m.matrix;
  return CosimplicialDgLie(std::move(lv), std::move(cof), std::move(cod), check);
}

std::string kind(const Record& r) {
  static const char* names[] = {"dg_lie", "artin", "tensor", "cover", "cosimplicial", "deformation"};
  return names[r.index()];
}

const std::string& name(const Record& r) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, r);
}

Record parse_record(const Document& doc) { return parse_at(Reader(doc), Pointer()); }

Record load_record(const std::string& path) { return parse_record(Document::from_file(path)); }

Json matrix_to_json(const Matrix& m) {
  if (m.rows() == m.cols() && m == Matrix::identity(m.rows())) return "identity";
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const LieRecord& r) {
  const DgLieAlgebra& g = r.algebra;
  std::vector<std::string> labels;
  Json basis = Json::array();
  for (const auto& b : g.basis()) {
    labels.push_back(b.label);
    basis.push_back({{"label", b.label}, {"degree", b.degree}});
  }
  Json diff = Json::array();
  for (std::size_t s = 0; s < g.dim(); ++s)
    for (std::size_t t = 0; t < g.dim(); ++t)
      if (sgn(g.differential()(t, s)) != 0)
        diff.push_back({{"source", labels[s]}, {"target", labels[t]}, {"coeff", to_string(g.differential()(t, s))}});
  Json br = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      for (auto& e : terms_to_json(labels, g.structure(), i, j)) br.push_back(std::move(e));
  return {{"kind", "dg_lie"}, {"name", r.name}, {"basis", basis}, {"differential", diff}, {"bracket", br}};
}

Json to_json(const ArtinRecord& r) {
  Json prod = Json::array();
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    for (std::size_t j = i; j < r.labels.size(); ++j)
      if (i != r.unit && j != r.unit)
        for (auto& e : terms_to_json(r.labels, r.product, i, j)) prod.push_back(std::move(e));
  return {{"kind", "artin"}, {"name", r.name}, {"basis", r.labels}, {"unit", r.labels[r.unit]}, {"product", prod}};
}

namespace {

Json cover_json(const CoverRecord& r) {
  Json inter = Json::array();
  for (const auto& in : r.intersections) {
    Json e = {{"set", index_set_json(in.set)}, {"nonempty", in.nonempty}};
    if (in.nonempty) e["sections"] = in.sections;
    inter.push_back(std::move(e));
  }
  Json res = Json::array();
  for (const auto& x : r.restrictions)
    res.push_back({{"from", index_set_json(x.from)}, {"add", x.add}, {"matrix", matrix_to_json(x.matrix)}});
  return {{"kind", "cover"}, {"name", r.name},  {"opens", r.opens}, {"algebras", algebra_table(r.algebras)},
          {"intersections", inter}, {"restrictions", res}};
}

Json maps_json(const std::vector<CosimplicialRecord::Map>& maps) {
  Json out = Json::array();
  for (const auto& m : maps) out.push_back({{"level", m.level}, {"index", m.index}, {"matrix", matrix_to_json(m.matrix)}});
  return out;
}

}  // namespace

Json to_json(const Record& r) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LieRecord> || std::is_same_v<T, ArtinRecord>) {
          return to_json(x);
        } else if constexpr (std::is_same_v<T, TensorRecord>) {
          return {{"kind", "tensor"}, {"name", x.name}, {"base", to_json(x.base)}, {"lie", to_json(x.lie)}};
        } else if constexpr (std::is_same_v<T, CoverRecord>) {
          return cover_json(x);
        } else if constexpr (std::is_same_v<T, CosimplicialRecord>) {
          return {{"kind", "cosimplicial"},          {"name", x.name},
                  {"algebras", algebra_table(x.algebras)}, {"levels", x.levels},
                  {"cofaces", maps_json(x.cofaces)},  {"codegeneracies", maps_json(x.codegeneracies)}};
        } else {
          return {{"kind", "deformation"}, {"name", x.name}, {"base", to_json(x.base)}, {"cover", cover_json(x.cover)}};
        }
      },
      r);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace deligne::io
