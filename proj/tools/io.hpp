#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "deligne/cech.hpp"
#include "deligne/cosimplicial.hpp"
#include "deligne/dg_algebra.hpp"
#include "deligne/nilpotent.hpp"
#include "json.hpp"

namespace deligne::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, std::string field, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": field " + (field.empty() ? "/" : field) + ": " +
                           message),
        file_(std::move(file)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string file_;
  int line_;
  std::string field_;
};

/// Parsed JSON text remembering the source line of every key and value.
class Document {
 public:
  /// Throws ParseError on unreadable files and syntax errors.
  static Document from_file(const std::string& path);
  static Document from_string(const std::string& text, std::string name);

  const Json& root() const { return root_; }
  const std::string& name() const { return name_; }
  /// Line of the value at p, or of its nearest recorded ancestor.
  int line(const Json::json_pointer& p) const;
  [[noreturn]] void fail(const Json::json_pointer& p, const std::string& message) const;

 private:
  std::string name_;
  Json root_;
  std::map<std::string, int> lines_;
};

/// Structure constants are kept unvalidated so that axiom failures surface as check verdicts, not parse errors.
struct LieRecord {
  std::string name;
  DgLieAlgebra algebra;  // built with Check::kNone
};

struct ArtinRecord {
  std::string name;
  std::vector<std::string> labels;
  std::size_t unit = 0;
  StructureConstants product;

  /// Throws std::invalid_argument when the table is not a local artinian algebra.
  ArtinAlgebra build() const;
  static ArtinRecord from(std::string name, const ArtinAlgebra& a);
};

/// m_A (x) L.
struct TensorRecord {
  std::string name;
  ArtinRecord base;
  LieRecord lie;
};

struct CoverRecord {
  struct Intersection {
    IndexSet set;
    bool nonempty = true;
    std::string sections;  // reference into algebras when nonempty
  };
  struct Restriction {
    IndexSet from;
    int add = 0;
    Matrix matrix;
  };
  std::string name;
  int opens = 0;
  std::vector<LieRecord> algebras;
  std::vector<Intersection> intersections;
  std::vector<Restriction> restrictions;

  CoverSpec build() const;
};

struct CosimplicialRecord {
  struct Map {
    int level = 0;
    int index = 0;
    Matrix matrix;
  };
  std::string name;
  std::vector<LieRecord> algebras;
  std::vector<std::string> levels;  // references into algebras
  std::vector<Map> cofaces;
  std::vector<Map> codegeneracies;

  /// Throws std::invalid_argument on a failed identity when check == Check::kFull.
  CosimplicialDgLie build(Check check = Check::kFull) const;
};

/// Cover whose section algebras get tensored with the maximal ideal of the base.
struct DeformationRecord {
  std::string name;
  ArtinRecord base;
  CoverRecord cover;
};

using Record = std::variant<LieRecord, ArtinRecord, TensorRecord, CoverRecord, CosimplicialRecord, DeformationRecord>;

/// "dg_lie", "artin", "tensor", "cover", "cosimplicial" or "deformation".
std::string kind(const Record& r);
const std::string& name(const Record& r);

/// Throws ParseError naming the file, line and offending field.
Record parse_record(const Document& doc);
Record load_record(const std::string& path);

Json to_json(const Record& r);
Json to_json(const LieRecord& r);
Json to_json(const ArtinRecord& r);

/// "identity" for identity matrices, rows of "p/q" strings otherwise.
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace deligne::io
