#include "wam/monomial_data.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "wam/errors.hpp"

namespace wam {

using Json = nlohmann::ordered_json;

std::string fnv1a_hex(std::string_view data)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4)
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

namespace {

template<typename Range>
void append_list(std::ostringstream &os, Range const &values)
{
  bool first = true;
  for (auto const &v : values) {
    if (!first)
      os << ',';
    os << v;
    first = false;
  }
}

void append_vectors(std::ostringstream &os, std::vector<NVector> const &vs)
{
  for (auto const &v : vs) {
    os << '[';
    append_list(os, std::vector<int>(v.data(), v.data() + v.size()));
    os << ']';
  }
}

Json vector_array(std::vector<NVector> const &vs)
{
  Json a = Json::array();
  for (auto const &v : vs)
    a.push_back(std::vector<int>(v.data(), v.data() + v.size()));
  return a;
}

std::vector<NVector> read_vectors(Json const &j, std::size_t r,
                                  char const *field)
{
  std::vector<NVector> out;
  for (auto const &row : j) {
    auto values = row.get<std::vector<int>>();
    if (values.size() != r)
      throw InputError(std::string("monomial data: ") + field +
                       " entry has dimension " + std::to_string(values.size()) +
                       ", expected " + std::to_string(r));
    NVector v(static_cast<Eigen::Index>(r));
    for (std::size_t i = 0; i < r; ++i) {
      if (values[i] < 0)
        throw InputError(std::string("monomial data: negative entry in ") +
                         field);
      v(static_cast<Eigen::Index>(i)) = values[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

std::string compute_digest(MonomialDataFile const &f)
{
  std::ostringstream os;
  os << "r=" << f.r << ";order=" << f.group_order << ";sizes=";
  append_list(os, f.class_sizes);
  os << ";orders=";
  append_list(os, f.element_orders);
  os << ";degrees=";
  append_list(os, f.degrees);
  os << ";vectors=";
  append_vectors(os, f.vectors);
  os << ";basis=";
  append_vectors(os, f.basis);
  return fnv1a_hex(os.str());
}

std::string to_json_text(MonomialDataFile const &f)
{
  Json j;
  j["schema_version"] = f.schema_version;
  j["descriptor"] = f.descriptor;
  j["r"] = f.r;
  j["group_order"] = f.group_order;
  j["degrees"] = f.degrees;
  j["class_sizes"] = f.class_sizes;
  j["element_orders"] = f.element_orders;
  j["digest"] = f.digest;
  j["vectors"] = vector_array(f.vectors);
  j["basis"] = vector_array(f.basis);
  j["engine_version"] = f.engine_version;
  j["seed"] = f.seed;
  return j.dump(2) + "\n";
}

MonomialDataFile parse_monomial_data(std::string const &text)
{
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::exception const &e) {
    throw InputError(std::string("monomial data: invalid JSON: ") + e.what());
  }

  MonomialDataFile f;
  try {
    f.schema_version = j.at("schema_version").get<int>();
    if (f.schema_version != kSchemaVersion)
      throw InputError("monomial data: schema version " +
                       std::to_string(f.schema_version) + " not supported (expected " +
                       std::to_string(kSchemaVersion) + ")");
    f.descriptor = j.at("descriptor").get<std::string>();
    f.r = j.at("r").get<std::size_t>();
    f.group_order = j.at("group_order").get<std::uint64_t>();
    f.degrees = j.at("degrees").get<std::vector<unsigned>>();
    f.class_sizes = j.at("class_sizes").get<std::vector<std::size_t>>();
    f.element_orders = j.at("element_orders").get<std::vector<std::size_t>>();
    f.digest = j.at("digest").get<std::string>();
    f.vectors = read_vectors(j.at("vectors"), f.r, "vectors");
    f.basis = read_vectors(j.at("basis"), f.r, "basis");
    f.engine_version = j.at("engine_version").get<std::string>();
    f.seed = j.at("seed").get<std::uint64_t>();
  } catch (nlohmann::json::exception const &e) {
    throw InputError(std::string("monomial data: ") + e.what());
  }

  if (f.r == 0 || f.degrees.size() != f.r || f.class_sizes.size() != f.r ||
      f.element_orders.size() != f.r)
    throw InputError("monomial data: class data does not have length r");
  if (f.basis.empty())
    throw InputError("monomial data: empty basis");
  std::unordered_set<NVector, VectorHash, VectorEqual> vs(f.vectors.begin(),
                                                          f.vectors.end());
  for (auto const &b : f.basis)
    if (!vs.count(b))
      throw InputError("monomial data: basis vector not in the vector set");
  if (compute_digest(f) != f.digest)
    throw InputError("monomial data: digest mismatch (stored " + f.digest +
                     ", computed " + compute_digest(f) + ")");
  return f;
}

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

MonomialDataFile read_monomial_data(std::filesystem::path const &path)
{
  return parse_monomial_data(read_file(path));
}

void write_file_atomic(std::filesystem::path const &path,
                       std::string const &contents)
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw InputError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out)
      throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

} // namespace wam
