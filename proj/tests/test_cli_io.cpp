#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "wam/errors.hpp"
#include "wam/group_spec.hpp"
#include "wam/pipeline.hpp"

using namespace wam;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(std::string const &name)
{
  auto dir = fs::temp_directory_path() / ("wam_test_" + name + "_" +
                                          std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string error_of(std::string const &text)
{
  try {
    parse_group_spec(text);
  } catch (InputError const &e) {
    return e.what();
  }
  return {};
}

GroupSpec random_spec(std::mt19937 &rng, int depth)
{
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1);
  GroupSpec s;
  switch (kind(rng)) {
  case 0: {
    s.kind = GroupSpec::Kind::named;
    std::vector<std::pair<std::string, std::vector<long long>>> names{
      {"Sym", {3}}, {"Alt", {5}}, {"Cyclic", {4}}, {"SL", {2, 3}}, {"GL", {2, 5}}};
    auto const &[n, a] = names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)];
    s.name = n;
    s.args = a;
    break;
  }
  case 1: {
    s.kind = GroupSpec::Kind::perm;
    int gens = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int g = 0; g < gens; ++g) {
      std::vector<unsigned> pts(7);
      std::iota(pts.begin(), pts.end(), 0u);
      std::shuffle(pts.begin(), pts.end(), rng);
      s.generators.push_back(to_cycle_list(Permutation(pts)));
    }
    break;
  }
  case 2:
    s.kind = GroupSpec::Kind::direct;
    s.operands = {random_spec(rng, depth - 1), random_spec(rng, depth - 1)};
    break;
  default:
    s.kind = GroupSpec::Kind::quotient;
    s.operands = {random_spec(rng, depth - 1)};
    s.normal = static_cast<GroupSpec::Normal>(std::uniform_int_distribution<int>(0, 2)(rng));
    if (s.normal == GroupSpec::Normal::generators)
      s.generators.push_back({{1, 2, 3}});
    break;
  }
  return s;
}

} // namespace

TEST(GroupSpec, ParsesExamples)
{
  auto a = parse_group_spec("Alt(5)");
  EXPECT_EQ(a.kind, GroupSpec::Kind::named);
  EXPECT_EQ(build_group(a).degree(), 5u);

  auto p = parse_group_spec("Perm[(1,2),(1,2,3)]");
  EXPECT_EQ(p.kind, GroupSpec::Kind::perm);
  EXPECT_EQ(build_group(p).order(), 6u);

  auto ws = parse_group_spec("  Perm [ ( 1 , 2 ) , (1,2, 3) ]  ");
  EXPECT_EQ(ws, p);

  auto q = parse_group_spec("Quotient(SL(2,3); center)");
  EXPECT_EQ(build_group(q).order(), 12u);
  auto d = parse_group_spec("Direct(SL(2,3),Cyclic(2))");
  EXPECT_EQ(build_group(d).order(), 48u);
  auto qd = parse_group_spec("Quotient(Sym(4);derived)");
  EXPECT_EQ(build_group(qd).order(), 2u);
  auto qg = parse_group_spec("Quotient(Sym(4);(1,2)(3,4),(1,3)(2,4))");
  EXPECT_EQ(build_group(qg).order(), 6u);
  auto multi = parse_group_spec("Perm[(1,2)(3,4,5)]");
  EXPECT_EQ(build_group(multi).order(), 6u);
  EXPECT_EQ(build_group(parse_group_spec("Perm[]")).order(), 1u);
  EXPECT_EQ(build_group(parse_group_spec("Perm[()]")).order(), 1u);
}

TEST(GroupSpec, ErrorsCarryPositions)
{
  EXPECT_NE(error_of("Perm[(1,1,2)]").find("repeated point 1"), std::string::npos);
  EXPECT_NE(error_of("Perm[(1,1,2)]").find("position 8"), std::string::npos);
  EXPECT_NE(error_of("Foo(3)").find("unknown constructor 'Foo'"), std::string::npos);
  EXPECT_NE(error_of("Alt(5").find("position 5"), std::string::npos);
  EXPECT_NE(error_of("Alt(5))").find("trailing"), std::string::npos);
  EXPECT_NE(error_of("Perm[(1,2)(2,3)]").find("not disjoint"), std::string::npos);
  EXPECT_NE(error_of("Perm[(0,1)]").find("out of range"), std::string::npos);
  EXPECT_NE(error_of("Quotient(Sym(3);bogus)").find("expected cycles"), std::string::npos);
  EXPECT_NE(error_of("").find("position 0"), std::string::npos);
}

TEST(GroupSpec, BuildErrors)
{
  EXPECT_THROW(build_group(parse_group_spec("SL(2,6)")), InputError);
  EXPECT_THROW(build_group(parse_group_spec("Quotient(Sym(3);(1,2))")), InputError);
  EXPECT_THROW(build_group(parse_group_spec("Quotient(Sym(3);(1,5))")), InputError);
  EXPECT_THROW(build_group(parse_group_spec("Sym(8)")), ResourceCapError);
  EXPECT_THROW(build_group(parse_group_spec("Perm[(1,2,3,4,5,6,7,8),(1,2)]")),
               ResourceCapError);
}

TEST(GroupSpec, CanonicalRendering)
{
  EXPECT_EQ(render(parse_group_spec(" Perm[ (3,1,2)(5,4) , ()]")), "Perm[(1,2,3)(4,5),()]");
  EXPECT_EQ(render(parse_group_spec("Quotient( SL(2,3) ; center )")),
            "Quotient(SL(2,3);center)");
  EXPECT_EQ(render(parse_group_spec("Perm[(2)(1,3)]")), "Perm[(1,3)]");
}

TEST(GroupSpec, RoundTripProperty)
{
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    GroupSpec s = random_spec(rng, 3);
    std::string text = render(s);
    EXPECT_EQ(parse_group_spec(text), s) << text;
    EXPECT_EQ(render(parse_group_spec(text)), text);
  }
}

TEST(MonomialData, ExportImportRoundTrip)
{
  PipelineOptions opts;
  auto result = run_pipeline(parse_group_spec("SL(2,3)"), opts);
  auto data = to_monomial_data(result);
  auto text = to_json_text(data);
  auto back = parse_monomial_data(text);
  EXPECT_EQ(back.basis, result.basis.basis);
  EXPECT_EQ(back.vectors, result.vectors.vectors);
  EXPECT_EQ(back.basis.size(), 8u);
  EXPECT_EQ(back.degrees, result.table.degrees);
  EXPECT_EQ(to_json_text(back), text);
  auto rep = classify(back.hilbert_basis());
  EXPECT_EQ(rep.flags.nam, result.report.flags.nam);
  EXPECT_EQ(rep.flags.wam, result.report.flags.wam);
  EXPECT_EQ(rep.flags.bam, result.report.flags.bam);
  EXPECT_EQ(rep.flags.monomial, result.report.flags.monomial);

  LfunRequest req;
  req.command = LfunCommand::theorem4;
  req.k = 4;
  EXPECT_EQ(run_lfun(back, req, true), run_lfun(data, req, true));
}

TEST(MonomialData, TamperingIsDetected)
{
  auto data = to_monomial_data(run_pipeline(parse_group_spec("SL(2,3)"), {}));
  auto text = to_json_text(data);

  auto tampered = data;
  tampered.vectors[0](0) += 1;
  tampered.vectors[0](1) += 1;
  try {
    parse_monomial_data(to_json_text(tampered));
    FAIL() << "tampered vector accepted";
  } catch (InputError const &e) {
    EXPECT_NE(std::string(e.what()).find("digest"), std::string::npos);
  }

  auto schema = text;
  schema.replace(schema.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
  EXPECT_THROW(parse_monomial_data(schema), InputError);

  auto wrong_dim = data;
  wrong_dim.basis[0] = NVector::Ones(3);
  EXPECT_THROW(parse_monomial_data(to_json_text(wrong_dim)), InputError);

  auto not_subset = data;
  not_subset.basis[0] = NVector::Constant(7, 5);
  not_subset.digest = compute_digest(not_subset);
  EXPECT_THROW(parse_monomial_data(to_json_text(not_subset)), InputError);

  EXPECT_THROW(parse_monomial_data("{ not json"), InputError);
}

TEST(Cache, HitAndMissGiveIdenticalReports)
{
  auto dir = scratch_dir("cache");
  PipelineOptions opts;
  opts.cache_dir = dir;
  auto spec = parse_group_spec("GL(2,3)");
  auto miss = run_pipeline(spec, opts);
  EXPECT_FALSE(miss.cache.subgroups);
  auto hit = run_pipeline(spec, opts);
  EXPECT_TRUE(hit.cache.subgroups);
  EXPECT_TRUE(hit.cache.table);
  EXPECT_TRUE(hit.cache.vectors);
  EXPECT_EQ(classify_report_json(miss), classify_report_json(hit));
  EXPECT_EQ(classify_report_text(miss), classify_report_text(hit));
  auto uncached = run_pipeline(spec, {});
  EXPECT_EQ(classify_report_json(uncached), classify_report_json(hit));

  auto entry = cache_entry(dir, spec);
  EXPECT_TRUE(fs::exists(entry / "subgroups.json"));
  EXPECT_TRUE(fs::exists(entry / "character_table.json"));
  EXPECT_TRUE(fs::exists(entry / "monomial_vectors.json"));
  for (auto const &f : fs::directory_iterator(entry))
    EXPECT_NE(f.path().extension(), ".tmp");
  fs::remove_all(dir);
}

TEST(Cache, CorruptionTriggersRecompute)
{
  auto dir = scratch_dir("corrupt");
  PipelineOptions opts;
  opts.cache_dir = dir;
  auto spec = parse_group_spec("SL(2,3)");
  auto first = run_pipeline(spec, opts);
  auto entry = cache_entry(dir, spec);

  for (auto name : {"subgroups.json", "character_table.json", "monomial_vectors.json"}) {
    auto path = entry / name;
    auto text = read_file(path);
    auto at = text.find("\"descriptor\"");
    ASSERT_NE(at, std::string::npos);
    text.insert(at, "\"junk\": 1, ");
    std::ofstream(path) << text;
  }
  auto second = run_pipeline(spec, opts);
  EXPECT_FALSE(second.cache.subgroups);
  EXPECT_FALSE(second.cache.table);
  EXPECT_FALSE(second.cache.vectors);
  EXPECT_EQ(classify_report_json(first), classify_report_json(second));
  auto third = run_pipeline(spec, opts);
  EXPECT_TRUE(third.cache.subgroups && third.cache.table && third.cache.vectors);

  std::ofstream(entry / "character_table.json") << "garbage";
  auto fourth = run_pipeline(spec, opts);
  EXPECT_FALSE(fourth.cache.table);
  EXPECT_EQ(classify_report_json(first), classify_report_json(fourth));

  // a different seed must not reuse the stored table
  opts.seed = 5;
  auto fifth = run_pipeline(spec, opts);
  EXPECT_FALSE(fifth.cache.table);
  EXPECT_TRUE(fifth.cache.subgroups);
  fs::remove_all(dir);
}

TEST(Pipeline, DeterministicReports)
{
  auto spec = parse_group_spec("Alt(6)");
  PipelineOptions one;
  PipelineOptions four;
  four.jobs = 4;
  EXPECT_EQ(classify_report_json(run_pipeline(spec, one)),
            classify_report_json(run_pipeline(spec, four)));
}

TEST(Lfun, Commands)
{
  auto data = to_monomial_data(run_pipeline(parse_group_spec("SL(2,3)"), {}));
  LfunRequest req;
  req.command = LfunCommand::factorial;
  req.d = OrderVector::Zero(7);
  EXPECT_NE(run_lfun(data, req, true).find("\"factorial\": true"), std::string::npos);

  req.command = LfunCommand::admissible;
  req.d = parse_order_vector("-1,0,0,0,0,0,1");
  EXPECT_NE(run_lfun(data, req, true).find("\"admissible\": false"), std::string::npos);

  req.command = LfunCommand::theorem3;
  EXPECT_THROW(run_lfun(data, req, true), InputError); // inadmissible
  req.d = parse_order_vector("1,2");
  EXPECT_THROW(run_lfun(data, req, true), InputError); // dimension
  req.d.reset();
  EXPECT_THROW(run_lfun(data, req, true), InputError);

  req.command = LfunCommand::theorem4;
  req.k = 7;
  EXPECT_THROW(run_lfun(data, req, true), InputError);

  EXPECT_THROW(parse_lfun_command("theorem5"), InputError);
  EXPECT_THROW(parse_order_vector("1,x"), InputError);
  EXPECT_EQ(parse_order_vector("-1, 2"), (OrderVector(2) << -1, 2).finished());
}

TEST(Lfun, HilbertFixture)
{
  MonomialDataFile f;
  f.r = 2;
  f.group_order = 2;
  f.degrees = {1, 1};
  f.class_sizes = {1, 1};
  f.element_orders = {1, 2};
  f.vectors = {NVector::Unit(2, 0), NVector::Unit(2, 1)};
  f.basis = f.vectors;
  f.descriptor = "Cyclic(2)";
  f.digest = compute_digest(f);
  LfunRequest req;
  req.command = LfunCommand::hilbert;
  req.d = parse_order_vector("-1,2");
  auto text = run_lfun(f, req, false);
  EXPECT_NE(text.find("(2,1)\n  (1,1)\n  (0,1)"), std::string::npos) << text;
}
