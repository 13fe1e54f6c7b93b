#ifndef WAM_PIPELINE_HPP
#define WAM_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wam/character_table.hpp"
#include "wam/classifiers.hpp"
#include "wam/group_spec.hpp"
#include "wam/lfunction.hpp"
#include "wam/monomial_data.hpp"
#include "wam/monoid.hpp"

namespace wam {

struct PipelineOptions
{
  std::size_t size_cap = kDefaultSizeCap;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  std::uint64_t bam_box_limit = kDefaultBamBoxLimit;
  /// Empty: no cache.
  std::filesystem::path cache_dir;
};

/// Which intermediates were read from the cache. Not part of any report.
struct CacheStatus
{
  bool subgroups = false;
  bool table = false;
  bool vectors = false;
};

struct PipelineResult
{
  std::string descriptor; // canonical rendering of the spec
  std::uint64_t group_order = 0;
  std::size_t subgroup_classes = 0;
  std::size_t subgroup_total = 0;
  CharacterTable table;
  MonomialVectorSet vectors;
  HilbertBasis basis;
  ClassificationReport report;
  CacheStatus cache;
};

/// Group, subgroup classes, character table and monomial vectors, reading
/// and writing the cache when `options.cache_dir` is set. A cache entry whose
/// digest, engine version or seed does not match is recomputed and
/// overwritten.
PipelineResult run_pipeline(GroupSpec const &spec,
                            PipelineOptions const &options);

/// Cache directory for a spec: <cache_dir>/<digest of canonical text>.
std::filesystem::path cache_entry(std::filesystem::path const &cache_dir,
                                  GroupSpec const &spec);

MonomialDataFile to_monomial_data(PipelineResult const &result);

/// Classifier output plus the vectors and witness tables that justify it.
std::string classify_report_json(PipelineResult const &result);
std::string classify_report_text(PipelineResult const &result);

/// Same report computed from a data file (no subgroup counts).
std::string classify_report_json(MonomialDataFile const &data,
                                 ClassificationReport const &report);
std::string classify_report_text(MonomialDataFile const &data,
                                 ClassificationReport const &report);

std::string basis_json(MonomialDataFile const &data);
std::string basis_text(MonomialDataFile const &data);

enum class LfunCommand
{
  admissible,
  hilbert,
  factorial,
  theorem3,
  theorem4
};

LfunCommand parse_lfun_command(std::string const &name);

struct LfunRequest
{
  LfunCommand command = LfunCommand::admissible;
  std::optional<OrderVector> d;
  std::size_t k = 0;
  int bound = 3;
};

/// Report for one order-vector command. Throws InputError on dimension
/// mismatch, on a missing d, and when a theorem check reports a violated
/// precondition.
std::string run_lfun(MonomialDataFile const &data, LfunRequest const &request,
                     bool json);

/// Parses "1,-2,0" into a vector.
OrderVector parse_order_vector(std::string const &text);

} // namespace wam

#endif // WAM_PIPELINE_HPP
