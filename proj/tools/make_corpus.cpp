// Regenerates the bundled corpus: make_corpus <output-dir>.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "deligne/cech.hpp"
#include "fixtures.hpp"
#include "instances.hpp"
#include "io.hpp"

namespace {

using namespace deligne;

DgLieAlgebra line() { return DgLieAlgebra({{"x", 0}}, Matrix(1, 1), StructureConstants(1)); }

/// Every subset of {0..opens-1} in size-then-lexicographic order.
std::vector<IndexSet> all_subsets(int opens) {
  std::vector<IndexSet> out;
  for (int mask = 1; mask < (1 << opens); ++mask) {
    IndexSet s;
    for (int i = 0; i < opens; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
  return out;
}

/// Assigns each distinct algebra a name prefix + counter, reusing names for repeats.
class AlgebraTable {
 public:
  explicit AlgebraTable(std::string prefix) : prefix_(std::move(prefix)) {}

  std::string add(const DgLieAlgebra& g) {
    const std::string key = io::dump(io::to_json(io::LieRecord{"", g}));
    auto it = names_.find(key);
    if (it != names_.end()) return it->second;
    std::string name = prefix_ + std::to_string(records_.size());
    names_.emplace(key, name);
    records_.push_back({name, g});
    return name;
  }
  const std::vector<io::LieRecord>& records() const { return records_; }

 private:
  std::string prefix_;
  std::map<std::string, std::string> names_;
  std::vector<io::LieRecord> records_;
};

io::CoverRecord cover_record(const std::string& name, const CoverSpec& c) {
  io::CoverRecord r;
  r.name = name;
  r.opens = c.opens();
  AlgebraTable table("sections");
  for (const auto& j : all_subsets(c.opens())) {
    if (c.nonempty(j)) {
      r.intersections.push_back({j, true, table.add(c.sections(j))});
    } else {
      r.intersections.push_back({j, false, ""});
    }
  }
  for (const auto& [key, m] : c.elementary_restrictions()) r.restrictions.push_back({key.first, key.second, m});
  r.algebras = table.records();
  return r;
}

io::CosimplicialRecord cosimplicial_record(const std::string& name, const CosimplicialDgLie& g) {
  io::CosimplicialRecord r;
  r.name = name;
  AlgebraTable table("level");
  for (int q = 0; q <= g.top(); ++q) r.levels.push_back(table.add(g.level(q)));
  for (int q = 1; q <= g.top(); ++q)
    for (int i = 0; i <= q; ++i) r.cofaces.push_back({q, i, g.coface(q, i)});
  for (int q = 0; q < g.top(); ++q)
    for (int i = 0; i <= q; ++i) r.codegeneracies.push_back({q, i, g.codegeneracy(q, i)});
  r.algebras = table.records();
  return r;
}

io::TensorRecord tensor_record(const std::string& name, const io::ArtinRecord& base, const std::string& lie_name,
                               const DgLieAlgebra& g) {
  return {name, base, {lie_name, g}};
}

io::DeformationRecord deformation_record(const std::string& name, const io::ArtinRecord& base,
                                         const std::string& cover_name, const CoverSpec& c) {
  return {name, base, cover_record(cover_name, c)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const auto eps = io::ArtinRecord::from("dual_numbers", ArtinAlgebra::truncated_polynomial(2, "e"));
  const auto t3 = io::ArtinRecord::from("t3", ArtinAlgebra::truncated_polynomial(3));
  const DgLieAlgebra ef = fixtures::ef_algebra();
  const DgLieAlgebra ab = instances::abelian_sections();

  std::vector<std::pair<std::string, io::Record>> files;
  files.emplace_back("ef", io::LieRecord{"ef", ef});
  files.emplace_back("heisenberg", io::LieRecord{"heisenberg", fixtures::heisenberg()});
  files.emplace_back("dg_example", io::LieRecord{"dg_example", fixtures::dg_example()});
  files.emplace_back("odd_square", io::LieRecord{"odd_square", fixtures::odd_square_algebra()});
  files.emplace_back("wz", io::LieRecord{"wz", instances::wz_with_grading()});
  files.emplace_back("sl2_module", io::LieRecord{"sl2_module", instances::sl2_with_module()});
  files.emplace_back("dual_numbers", eps);
  files.emplace_back("t3", t3);
  files.emplace_back("ef_t3", tensor_record("ef_t3", t3, "ef", ef));
  files.emplace_back("ef_eps", tensor_record("ef_eps", eps, "ef", ef));
  files.emplace_back("heisenberg_t3", tensor_record("heisenberg_t3", t3, "heisenberg", fixtures::heisenberg()));
  files.emplace_back("wz_eps", tensor_record("wz_eps", eps, "wz", instances::wz_with_grading()));
  files.emplace_back("abelian_t3", tensor_record("abelian_t3", t3, "abelian", ab));
  files.emplace_back("constant_ef", cosimplicial_record("constant_ef", CosimplicialDgLie::constant(ef, 2)));
  files.emplace_back("constant_dg",
                     cosimplicial_record("constant_dg", CosimplicialDgLie::constant(fixtures::dg_example(), 2)));
  files.emplace_back("cech_two_open_line",
                     cosimplicial_record("cech_two_open_line",
                                         cech_cosimplicial(instances::two_open_cover(line())).object));
  files.emplace_back("cech_circle_line",
                     cosimplicial_record("cech_circle_line",
                                         cech_cosimplicial(instances::circle_cover(line())).object));
  files.emplace_back("cech_doubled_ef",
                     cosimplicial_record("cech_doubled_ef",
                                         cech_cosimplicial(instances::doubled_two_open_cover(ef)).object));
  files.emplace_back("cover_circle_abelian", cover_record("cover_circle_abelian", instances::circle_cover(ab)));
  files.emplace_back("cover_two_open_ef", cover_record("cover_two_open_ef", instances::two_open_cover(ef)));
  files.emplace_back("cover_doubled_ef",
                     cover_record("cover_doubled_ef", instances::doubled_two_open_cover(ef)));
  files.emplace_back("two_open_abelian_eps", deformation_record("two_open_abelian_eps", eps, "two_open_abelian",
                                                                instances::two_open_cover(ab)));
  files.emplace_back("two_open_abelian_t3", deformation_record("two_open_abelian_t3", t3, "two_open_abelian",
                                                               instances::two_open_cover(ab)));
  files.emplace_back("circle_abelian_eps",
                     deformation_record("circle_abelian_eps", eps, "circle_abelian", instances::circle_cover(ab)));
  files.emplace_back("circle_abelian_t3",
                     deformation_record("circle_abelian_t3", t3, "circle_abelian", instances::circle_cover(ab)));
  files.emplace_back("two_open_ef_t3",
                     deformation_record("two_open_ef_t3", t3, "two_open_ef", instances::two_open_cover(ef)));

  for (const auto& [stem, rec] : files) {
    std::ofstream out(dir / (stem + ".json"), std::ios::binary);
    out << io::dump(io::to_json(rec));
    if (!out) {
      std::cerr << "cannot write " << (dir / (stem + ".json")).string() << "\n";
      return 1;
    }
  }
  std::cout << files.size() << " files written to " << dir.string() << "\n";
  return 0;
}
