#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wam/errors.hpp"
#include "wam/pipeline.hpp"

namespace {

struct Settings
{
  wam::PipelineOptions pipeline;
  std::string cache_dir;
  std::string format = "text";
  std::string spec;
  std::string data_file;
  std::string output;
};

bool json_output(Settings const &s) { return s.format == "json"; }

wam::MonomialDataFile load_data(Settings const &s)
{
  if (!s.data_file.empty())
    return wam::read_monomial_data(s.data_file);
  if (s.spec.empty())
    throw wam::InputError("give a group spec or --data FILE");
  auto spec = wam::parse_group_spec(s.spec);
  return wam::to_monomial_data(wam::run_pipeline(spec, s.pipeline));
}

void emit(Settings const &s, std::string const &text)
{
  if (s.output.empty() || s.output == "-")
    std::cout << text;
  else
    wam::write_file_atomic(s.output, text);
}

int classify(Settings const &s, std::string const &data_out)
{
  std::string report;
  wam::MonomialDataFile data;
  if (s.data_file.empty()) {
    if (s.spec.empty())
      throw wam::InputError("give a group spec or --data FILE");
    auto result = wam::run_pipeline(wam::parse_group_spec(s.spec), s.pipeline);
    data = wam::to_monomial_data(result);
    report = json_output(s) ? wam::classify_report_json(result)
                            : wam::classify_report_text(result);
  } else {
    data = wam::read_monomial_data(s.data_file);
    auto rep = wam::classify(data.hilbert_basis(), s.pipeline.bam_box_limit);
    report = json_output(s) ? wam::classify_report_json(data, rep)
                            : wam::classify_report_text(data, rep);
  }
  if (!data_out.empty())
    wam::write_file_atomic(data_out, wam::to_json_text(data));
  emit(s, report);
  return 0;
}

int run(int argc, char **argv)
{
  CLI::App app{"Monomial character monoids and almost monomial groups"};
  app.require_subcommand(1);
  Settings s;

  app.add_option("--cache-dir", s.cache_dir,
                 "Directory for cached subgroup lattices, tables and vectors");
  app.add_option("--size-cap", s.pipeline.size_cap, "Maximum group order")
    ->capture_default_str();
  app.add_option("--seed", s.pipeline.seed, "Seed for eigenspace splitting")
    ->capture_default_str();
  app.add_option("--jobs", s.pipeline.jobs, "Worker threads")
    ->capture_default_str()
    ->check(CLI::Range(1u, 256u));
  app.add_option("--format", s.format, "Output format")
    ->capture_default_str()
    ->check(CLI::IsMember({"json", "text"}));

  auto add_source = [&](CLI::App *cmd) {
    auto spec = cmd->add_option("spec", s.spec,
                                "Group spec, e.g. 'SL(2,3)' or 'Perm[(1,2),(1,2,3)]'");
    auto data = cmd->add_option("--data", s.data_file, "Monomial data file");
    spec->excludes(data);
  };

  auto *classify_cmd = app.add_subcommand("classify", "Run the full pipeline and report the flags");
  add_source(classify_cmd);
  std::string data_out;
  classify_cmd->add_option("--data-out", data_out, "Also write the monomial data file");
  classify_cmd->add_option("-o,--output", s.output, "Report file (default stdout)");

  auto *hilbert_cmd = app.add_subcommand("hilbert", "Hilbert basis of the monomial monoid");
  add_source(hilbert_cmd);
  hilbert_cmd->add_option("-o,--output", s.output, "Output file (default stdout)");

  auto *export_cmd = app.add_subcommand("export", "Write the monomial data file");
  export_cmd->add_option("spec", s.spec, "Group spec")->required();
  export_cmd->add_option("-o,--output", s.output, "Output file (default stdout)");

  auto *lfun_cmd = app.add_subcommand("lfun", "Order-vector calculus on a Hilbert basis");
  std::string command;
  std::string d_text;
  wam::LfunRequest request;
  lfun_cmd->add_option("command", command,
                       "admissible | hilbert | factorial | theorem3 | theorem4")
    ->required()
    ->check(CLI::IsMember({"admissible", "hilbert", "factorial", "theorem3",
                           "theorem4"}));
  add_source(lfun_cmd);
  lfun_cmd->add_option("--d", d_text, "Order vector, comma separated");
  lfun_cmd->add_option("--k", request.k, "Character index (0-based) for theorem4");
  lfun_cmd->add_option("--bound", request.bound, "Search bound for theorem4")
    ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return 1;
  }
  s.pipeline.cache_dir = s.cache_dir;

  if (classify_cmd->parsed())
    return classify(s, data_out);
  if (hilbert_cmd->parsed()) {
    auto data = load_data(s);
    emit(s, json_output(s) ? wam::basis_json(data) : wam::basis_text(data));
    return 0;
  }
  if (export_cmd->parsed()) {
    emit(s, wam::to_json_text(load_data(s)));
    return 0;
  }
  request.command = wam::parse_lfun_command(command);
  if (!d_text.empty())
    request.d = wam::parse_order_vector(d_text);
  emit(s, wam::run_lfun(load_data(s), request, json_output(s)));
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  try {
    return run(argc, argv);
  } catch (wam::InputError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (wam::ResourceCapError const &e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (wam::InvariantError const &e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (std::filesystem::filesystem_error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
