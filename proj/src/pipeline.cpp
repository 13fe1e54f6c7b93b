#include "wam/pipeline.hpp"

#include <sstream>

#include <json.hpp>

#include "wam/errors.hpp"
#include "wam/subgroups.hpp"

namespace wam {

using Json = nlohmann::ordered_json;

namespace {

std::vector<int> as_list(NVector const &v)
{
  return std::vector<int>(v.data(), v.data() + v.size());
}

Json vector_array(std::vector<NVector> const &vs)
{
  Json a = Json::array();
  for (auto const &v : vs)
    a.push_back(as_list(v));
  return a;
}

NVector from_list(std::vector<int> const &values)
{
  NVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

// ---- cache -------------------------------------------------------------

// Every cache file carries the engine version, the descriptor and a digest
// over the rest of its content.
void seal(Json &j)
{
  j.erase("digest");
  j["digest"] = fnv1a_hex(j.dump());
}

std::optional<Json> load_sealed(std::filesystem::path const &path,
                                std::string const &descriptor)
{
  std::error_code ec;
  if (!std::filesystem::exists(path, ec))
    return std::nullopt;
  try {
    Json j = Json::parse(read_file(path));
    std::string stored = j.at("digest").get<std::string>();
    j.erase("digest");
    if (fnv1a_hex(j.dump()) != stored ||
        j.at("engine_version").get<std::string>() != kEngineVersion ||
        j.at("descriptor").get<std::string>() != descriptor)
      return std::nullopt;
    return j;
  } catch (std::exception const &) {
    return std::nullopt;
  }
}

void store_sealed(std::filesystem::path const &path, Json j)
{
  seal(j);
  std::filesystem::create_directories(path.parent_path());
  write_file_atomic(path, j.dump(1) + "\n");
}

Json header(std::string const &descriptor)
{
  Json j;
  j["engine_version"] = kEngineVersion;
  j["descriptor"] = descriptor;
  return j;
}

std::optional<std::vector<SubgroupClass>>
load_subgroups(Json const &j, GroupTable const &g)
{
  if (j.at("group_order").get<std::uint64_t>() != g.size())
    return std::nullopt;
  std::vector<SubgroupClass> classes;
  for (auto const &c : j.at("classes")) {
    Subgroup h;
    h.members = Bitset::from_hex(g.size(), c.at("members").get<std::string>());
    h.members.for_each([&](std::size_t x) {
      h.elements.push_back(static_cast<ElementId>(x));
    });
    h.generators = c.at("generators").get<std::vector<ElementId>>();
    for (ElementId x : h.generators)
      if (x >= g.size() || !h.members.test(x))
        return std::nullopt;
    if (h.elements.empty() || h.elements.front() != 0 ||
        h.elements.back() >= g.size() || g.size() % h.order() != 0)
      return std::nullopt;
    classes.push_back(
      SubgroupClass{std::move(h), c.at("class_length").get<std::size_t>()});
  }
  return classes;
}

Json save_subgroups(std::string const &descriptor, GroupTable const &g,
                    std::vector<SubgroupClass> const &classes)
{
  Json j = header(descriptor);
  j["group_order"] = g.size();
  Json list = Json::array();
  for (auto const &c : classes) {
    Json e;
    e["order"] = c.representative.order();
    e["class_length"] = c.class_length;
    e["generators"] = c.representative.generators;
    e["members"] = c.representative.members.to_hex();
    list.push_back(std::move(e));
  }
  j["classes"] = std::move(list);
  return j;
}

std::optional<CharacterTable> load_table(Json const &j, GroupTable const &g,
                                         std::uint64_t seed)
{
  if (j.at("seed").get<std::uint64_t>() != seed)
    return std::nullopt;
  CharacterTable t;
  t.group_order = j.at("group_order").get<std::uint64_t>();
  t.exponent = j.at("exponent").get<std::uint64_t>();
  t.prime = j.at("prime").get<std::int64_t>();
  t.omega = j.at("omega").get<std::int64_t>();
  t.seed = seed;
  t.class_sizes = j.at("class_sizes").get<std::vector<std::size_t>>();
  t.element_orders = j.at("element_orders").get<std::vector<std::size_t>>();
  t.inverse_class = j.at("inverse_class").get<std::vector<std::size_t>>();
  t.degrees = j.at("degrees").get<std::vector<unsigned>>();
  auto rows = j.at("values").get<std::vector<std::vector<std::int64_t>>>();
  std::size_t const r = t.degrees.size();
  if (t.group_order != g.size() || g.classes().size() != r ||
      t.class_sizes.size() != r || t.element_orders.size() != r ||
      t.inverse_class.size() != r || rows.size() != r)
    return std::nullopt;
  for (std::size_t i = 0; i < r; ++i)
    if (t.class_sizes[i] != g.classes()[i].size || t.inverse_class[i] >= r)
      return std::nullopt;
  t.values.resize(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != r)
      return std::nullopt;
    for (std::size_t k = 0; k < r; ++k) {
      if (rows[i][k] < 0 || rows[i][k] >= t.prime)
        return std::nullopt;
      t.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
        rows[i][k];
    }
  }
  if (!is_prime(t.prime) || !check_orthogonality(t).ok())
    return std::nullopt;
  return t;
}

Json save_table(std::string const &descriptor, CharacterTable const &t)
{
  Json j = header(descriptor);
  j["seed"] = t.seed;
  j["group_order"] = t.group_order;
  j["exponent"] = t.exponent;
  j["prime"] = t.prime;
  j["omega"] = t.omega;
  j["class_sizes"] = t.class_sizes;
  j["element_orders"] = t.element_orders;
  j["inverse_class"] = t.inverse_class;
  j["degrees"] = t.degrees;
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < t.values.rows(); ++i) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(t.values.cols()));
    for (Eigen::Index k = 0; k < t.values.cols(); ++k)
      row[static_cast<std::size_t>(k)] = t.values(i, k);
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  return j;
}

std::optional<MonomialVectorSet> load_vectors(Json const &j,
                                              CharacterTable const &t,
                                              std::size_t class_count)
{
  if (j.at("seed").get<std::uint64_t>() != t.seed)
    return std::nullopt;
  MonomialVectorSet s;
  s.dimension = t.size();
  for (auto const &v : j.at("vectors")) {
    NVector x = from_list(v.get<std::vector<int>>());
    if (static_cast<std::size_t>(x.size()) != s.dimension ||
        (x.array() < 0).any())
      return std::nullopt;
    s.vectors.push_back(std::move(x));
  }
  for (auto const &w : j.at("witnesses")) {
    auto pair = w.get<std::vector<std::size_t>>();
    if (pair.size() != 2 || pair[0] >= class_count)
      return std::nullopt;
    s.witnesses.push_back(MonomialWitness{pair[0], pair[1]});
  }
  if (s.witnesses.size() != s.vectors.size() || s.vectors.empty())
    return std::nullopt;
  return s;
}

Json save_vectors(std::string const &descriptor, std::uint64_t seed,
                  MonomialVectorSet const &s)
{
  Json j = header(descriptor);
  j["seed"] = seed;
  j["vectors"] = vector_array(s.vectors);
  Json w = Json::array();
  for (auto const &x : s.witnesses)
    w.push_back({x.subgroup_class, x.character});
  j["witnesses"] = std::move(w);
  return j;
}

// ---- reports -----------------------------------------------------------

Json witness_json(WitnessTable const &w)
{
  Json rows = Json::array();
  for (auto const &row : w) {
    Json r = Json::array();
    for (auto const &x : row)
      r.push_back(x ? Json(*x) : Json(nullptr));
    rows.push_back(std::move(r));
  }
  return rows;
}

struct SubgroupCounts
{
  std::size_t classes;
  std::size_t total;
};

Json report_json(MonomialDataFile const &data, ClassificationReport const &rep,
                 std::optional<SubgroupCounts> counts)
{
  Json j;
  j["descriptor"] = data.descriptor;
  j["engine_version"] = data.engine_version;
  j["seed"] = data.seed;
  j["group_order"] = data.group_order;
  j["r"] = data.r;
  j["degrees"] = data.degrees;
  j["class_sizes"] = data.class_sizes;
  j["element_orders"] = data.element_orders;
  if (counts) {
    j["subgroup_classes"] = counts->classes;
    j["subgroups_total"] = counts->total;
  }
  j["monomial_vector_count"] = data.vectors.size();
  j["flags"] = {{"monomial", rep.flags.monomial},
                {"nam", rep.flags.nam},
                {"wam", rep.flags.wam},
                {"bam", rep.flags.bam}};
  j["implications_consistent"] = check_implications(rep.flags);
  j["hilbert_basis"] = vector_array(data.basis);
  j["nam_witnesses"] = witness_json(rep.nam_witnesses);
  j["wam_witnesses"] = witness_json(rep.wam_witnesses);
  if (rep.bam_counterexample)
    j["bam_counterexample"] = {{"k", rep.bam_counterexample->k},
                               {"psi", as_list(rep.bam_counterexample->psi)},
                               {"phi", as_list(rep.bam_counterexample->phi)}};
  else
    j["bam_counterexample"] = nullptr;
  j["digest"] = data.digest;
  return j;
}

std::string join(NVector const &v, char const *sep)
{
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    os << (i ? sep : "") << v(i);
  return os.str();
}

template<typename Range>
std::string join_range(Range const &values)
{
  std::ostringstream os;
  bool first = true;
  for (auto const &v : values) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  return os.str();
}

void list_failures(std::ostream &os, char const *label, WitnessTable const &w)
{
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j && !w[i][j])
        missing.push_back("(" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
  if (missing.empty())
    return;
  os << "  " << label << " unseparated pairs:";
  for (auto const &m : missing)
    os << ' ' << m;
  os << '\n';
}

std::string report_text(MonomialDataFile const &data,
                        ClassificationReport const &rep,
                        std::optional<SubgroupCounts> counts)
{
  std::ostringstream os;
  os << "group " << data.descriptor << "\n";
  os << "order " << data.group_order << ", " << data.r
     << " irreducible characters\n";
  os << "degrees " << join_range(data.degrees) << "\n";
  if (counts)
    os << "subgroups " << counts->total << " in " << counts->classes
       << " conjugacy classes\n";
  os << "monomial vectors " << data.vectors.size() << ", Hilbert basis "
     << data.basis.size() << "\n";
  for (std::size_t t = 0; t < data.basis.size(); ++t)
    os << "  sigma_" << t + 1 << " = (" << join(data.basis[t], ",") << ")\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << "monomial " << flag(rep.flags.monomial) << "\n";
  os << "nam " << flag(rep.flags.nam) << "\n";
  list_failures(os, "nam", rep.nam_witnesses);
  os << "wam " << flag(rep.flags.wam) << "\n";
  list_failures(os, "wam", rep.wam_witnesses);
  os << "bam " << flag(rep.flags.bam) << "\n";
  if (auto const &c = rep.bam_counterexample)
    os << "  chi_" << c->k + 1 << " = psi + phi with psi = (" << join(c->psi, ",")
       << "), phi = (" << join(c->phi, ",") << ")\n";
  os << "seed " << data.seed << ", engine " << data.engine_version
     << ", digest " << data.digest << "\n";
  return os.str();
}

} // namespace

std::filesystem::path cache_entry(std::filesystem::path const &cache_dir,
                                  GroupSpec const &spec)
{
  return cache_dir / fnv1a_hex(render(spec));
}

PipelineResult run_pipeline(GroupSpec const &spec,
                            PipelineOptions const &options)
{
  PipelineResult result;
  result.descriptor = render(spec);
  GroupTable g(build_group(spec, options.size_cap), options.size_cap);
  result.group_order = g.size();

  bool const cached = !options.cache_dir.empty();
  std::filesystem::path const dir =
    cached ? cache_entry(options.cache_dir, spec) : std::filesystem::path{};

  std::vector<SubgroupClass> classes;
  if (auto j = cached ? load_sealed(dir / "subgroups.json", result.descriptor)
                      : std::nullopt) {
    try {
      if (auto c = load_subgroups(*j, g)) {
        classes = std::move(*c);
        result.cache.subgroups = true;
      }
    } catch (std::exception const &) {
    }
  }
  if (!result.cache.subgroups) {
    classes = subgroup_conjugacy_classes(g);
    if (cached)
      store_sealed(dir / "subgroups.json",
                   save_subgroups(result.descriptor, g, classes));
  }
  result.subgroup_classes = classes.size();
  for (auto const &c : classes)
    result.subgroup_total += c.class_length;

  if (auto j = cached ? load_sealed(dir / "character_table.json",
                                    result.descriptor)
                      : std::nullopt) {
    try {
      if (auto t = load_table(*j, g, options.seed)) {
        result.table = std::move(*t);
        result.cache.table = true;
      }
    } catch (std::exception const &) {
    }
  }
  if (!result.cache.table) {
    result.table = character_table(g, options.seed);
    if (cached)
      store_sealed(dir / "character_table.json",
                   save_table(result.descriptor, result.table));
  }

  if (auto j = cached ? load_sealed(dir / "monomial_vectors.json",
                                    result.descriptor)
                      : std::nullopt) {
    try {
      if (auto s = load_vectors(*j, result.table, classes.size())) {
        result.vectors = std::move(*s);
        result.cache.vectors = true;
      }
    } catch (std::exception const &) {
    }
  }
  if (!result.cache.vectors) {
    result.vectors = monomial_vectors(g, result.table, classes, options.jobs);
    if (cached)
      store_sealed(dir / "monomial_vectors.json",
                   save_vectors(result.descriptor, options.seed, result.vectors));
  }

  result.basis = hilbert_basis(result.vectors);
  result.report = classify(result.basis, options.bam_box_limit);
  return result;
}

MonomialDataFile to_monomial_data(PipelineResult const &result)
{
  MonomialDataFile f;
  f.descriptor = result.descriptor;
  f.r = result.table.size();
  f.group_order = result.group_order;
  f.degrees = result.table.degrees;
  f.class_sizes = result.table.class_sizes;
  f.element_orders = result.table.element_orders;
  f.vectors = result.vectors.vectors;
  f.basis = result.basis.basis;
  f.seed = result.table.seed;
  f.digest = compute_digest(f);
  return f;
}

std::string classify_report_json(PipelineResult const &result)
{
  return report_json(to_monomial_data(result), result.report,
                     SubgroupCounts{result.subgroup_classes,
                                    result.subgroup_total})
           .dump(2) +
         "\n";
}

std::string classify_report_text(PipelineResult const &result)
{
  return report_text(to_monomial_data(result), result.report,
                     SubgroupCounts{result.subgroup_classes,
                                    result.subgroup_total});
}

std::string classify_report_json(MonomialDataFile const &data,
                                 ClassificationReport const &report)
{
  return report_json(data, report, std::nullopt).dump(2) + "\n";
}

std::string classify_report_text(MonomialDataFile const &data,
                                 ClassificationReport const &report)
{
  return report_text(data, report, std::nullopt);
}

std::string basis_json(MonomialDataFile const &data)
{
  Json j;
  j["descriptor"] = data.descriptor;
  j["r"] = data.r;
  j["degrees"] = data.degrees;
  j["hilbert_basis"] = vector_array(data.basis);
  j["lattice_rank"] = lattice_rank(data.basis);
  return j.dump(2) + "\n";
}

std::string basis_text(MonomialDataFile const &data)
{
  std::ostringstream os;
  os << "group " << data.descriptor << "\n";
  os << "degrees " << join_range(data.degrees) << "\n";
  for (std::size_t t = 0; t < data.basis.size(); ++t)
    os << "sigma_" << t + 1 << " = (" << join(data.basis[t], ",") << ")\n";
  os << "lattice rank " << lattice_rank(data.basis) << "\n";
  return os.str();
}

// ---- order vectors -----------------------------------------------------

LfunCommand parse_lfun_command(std::string const &name)
{
  if (name == "admissible")
    return LfunCommand::admissible;
  if (name == "hilbert")
    return LfunCommand::hilbert;
  if (name == "factorial")
    return LfunCommand::factorial;
  if (name == "theorem3")
    return LfunCommand::theorem3;
  if (name == "theorem4")
    return LfunCommand::theorem4;
  throw InputError("unknown lfun command '" + name + "'");
}

OrderVector parse_order_vector(std::string const &text)
{
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos)
      end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (std::exception const &) {
      throw InputError("order vector: bad entry '" + item + "'");
    }
    while (used < item.size() && item[used] == ' ')
      ++used;
    if (used != item.size())
      throw InputError("order vector: bad entry '" + item + "'");
    values.push_back(v);
    pos = end + 1;
  }
  return from_list(values);
}

std::string run_lfun(MonomialDataFile const &data, LfunRequest const &req,
                     bool json)
{
  HilbertBasis const hb = data.hilbert_basis();
  auto need_d = [&]() -> OrderVector const & {
    if (!req.d)
      throw InputError("this command needs an order vector d");
    if (static_cast<std::size_t>(req.d->size()) != data.r)
      throw InputError("order vector has dimension " +
                       std::to_string(req.d->size()) + ", expected r = " +
                       std::to_string(data.r));
    return *req.d;
  };

  Json j;
  j["descriptor"] = data.descriptor;
  std::ostringstream text;
  text << "group " << data.descriptor << "\n";

  switch (req.command) {
  case LfunCommand::admissible: {
    OrderVector const &d = need_d();
    std::vector<std::size_t> violations;
    for (std::size_t t = 0; t < hb.basis.size(); ++t)
      if (l_order(d, hb.basis[t]) < 0)
        violations.push_back(t);
    j["command"] = "admissible";
    j["d"] = as_list(d);
    j["admissible"] = violations.empty();
    j["violations"] = violations;
    text << "d = (" << join(d, ",") << ")\n"
         << "admissible " << (violations.empty() ? "true" : "false") << "\n";
    for (auto t : violations)
      text << "  sigma_" << t + 1 << " . d = " << l_order(d, hb.basis[t]) << "\n";
    break;
  }
  case LfunCommand::hilbert:
  case LfunCommand::factorial: {
    OrderVector const &d = need_d();
    HolMonoidBasis hol = hol_hilbert_basis(d);
    bool const factorial = req.command == LfunCommand::factorial;
    j["command"] = factorial ? "factorial" : "hilbert";
    j["d"] = as_list(d);
    j["hol_basis"] = vector_array(hol.basis);
    if (factorial)
      j["factorial"] = is_factorial(hol);
    text << "d = (" << join(d, ",") << ")\n";
    for (auto const &v : hol.basis)
      text << "  (" << join(v, ",") << ")\n";
    if (factorial)
      text << "factorial " << (is_factorial(hol) ? "true" : "false") << "\n";
    break;
  }
  case LfunCommand::theorem3: {
    OrderVector const &d = need_d();
    FactorialityCheck c = theorem3_check(hb, d);
    if (c.status == CheckStatus::precondition_violated)
      throw InputError("theorem3: " + c.detail);
    j["command"] = "theorem3";
    j["d"] = as_list(d);
    j["status"] = to_string(c.status);
    j["detail"] = c.detail;
    j["holomorphic"] = c.holomorphic;
    j["factorial"] = c.factorial;
    j["hol_basis"] = vector_array(c.hol.basis);
    text << "d = (" << join(d, ",") << ")\n"
         << to_string(c.status) << ": " << c.detail << "\n";
    for (auto const &v : c.hol.basis)
      text << "  (" << join(v, ",") << ")\n";
    break;
  }
  case LfunCommand::theorem4: {
    if (req.k >= data.r)
      throw InputError("theorem4: index k = " + std::to_string(req.k) +
                       " out of range for r = " + std::to_string(data.r));
    SimpleZeroCheck c = theorem4_check(hb, req.k, req.bound);
    if (c.status == CheckStatus::precondition_violated)
      throw InputError("theorem4: " + c.detail);
    j["command"] = "theorem4";
    j["k"] = req.k;
    j["bound"] = req.bound;
    j["status"] = to_string(c.status);
    j["detail"] = c.detail;
    j["examined"] = c.examined;
    j["counterexample"] =
      c.counterexample ? Json(as_list(*c.counterexample)) : Json(nullptr);
    text << "k = " << req.k << ", bound " << req.bound << "\n"
         << to_string(c.status) << ": " << c.detail << " (" << c.examined
         << " order vectors examined)\n";
    if (c.counterexample)
      text << "  d = (" << join(*c.counterexample, ",") << ")\n";
    break;
  }
  }
  return json ? j.dump(2) + "\n" : text.str();
}

} // namespace wam
