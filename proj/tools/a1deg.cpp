#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "a1deg/a1deg.hpp"

using namespace a1deg;

namespace {

enum class Format { Text, Json, Csv };

struct Request {
  std::string field = "Q";
  std::string vars;
  std::string system;
  std::string point;
  unsigned r = 0;
  unsigned n = 0;
  unsigned n_min = 2;
  unsigned n_max = 6;
  std::uint64_t seed = 0;
  unsigned retries = 8;
  bool random_forms = false;
  bool closed_only = false;
  bool sequential = false;
  Format format = Format::Text;
};

// Stage reported when a computation fails; some error kinds pin their own.
struct Stage {
  std::string name = "field";
};

std::string stage_for(ErrorKind kind, const Stage& current) {
  switch (kind) {
    case ErrorKind::InvalidField:
    case ErrorKind::UnsupportedField:
    case ErrorKind::FieldMismatch:
      return "field";
    case ErrorKind::Parse:
      return "parse";
    case ErrorKind::NotZeroDimensional:
      return "groebner";
    case ErrorKind::DegenerateForm:
    case ErrorKind::ZeroEntry:
      return "degenerate";
    default:
      return current.name;
  }
}

std::string explain(const Error& e) {
  const std::string what = e.what();
  if (e.kind() == ErrorKind::NotZeroDimensional && what.find("zeros are not isolated") == std::string::npos)
    return "zeros are not isolated: " + what;
  return what;
}

template <ExactField K>
void emit(const GWClass<K>& c, Format format) {
  if (format == Format::Json)
    std::cout << to_json(c).dump() << "\n";
  else
    std::cout << c.to_string() << "\n";
}

template <ExactField K>
RingPtr<K> system_ring(const K& k, const Request& req) {
  auto names = parse_variables(req.vars);
  if (names.empty()) fail(ErrorKind::Parse, "no variables given");
  if constexpr (is_function_field_v<K>) {
    for (const auto& v : names)
      if (v == k.parameter_name()) fail(ErrorKind::Parse, "variable '" + v + "' clashes with the field parameter");
  }
  return make_ring(k, std::move(names));
}

template <ExactField K>
EndoSystem<K> read_system(const RingPtr<K>& ring, const Request& req) {
  auto polys = parse_polynomials(ring, req.system);
  if (polys.size() != ring->arity())
    fail(ErrorKind::Parse, std::to_string(polys.size()) + " polynomials for " + std::to_string(ring->arity()) +
                               " variables");
  return EndoSystem<K>(std::move(polys));
}

int run_degree(const Request& req, bool local, Stage& stage) {
  auto desc = parse_field(req.field);
  visit_field(desc, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    stage.name = "parse";
    auto ring = system_ring(k, req);
    auto f = read_system(ring, req);
    std::optional<MaximalIdealSpec<K>> point;
    if (local) {
      point = MaximalIdealSpec<K>{parse_polynomials(ring, req.point)};
      if (point->generators.empty()) fail(ErrorKind::Parse, "empty point ideal");
    }
    stage.name = "groebner";
    emit(local ? local_degree(f, *point) : global_degree(f), req.format);
  });
  return 0;
}

int run_euler(const Request& req, Stage& stage) {
  auto desc = parse_field(req.field);
  if (desc.is_function_field()) fail(ErrorKind::UnsupportedField, "Euler characteristics need Q or F<p>");
  visit_field(desc, [&](const auto& k) {
    stage.name = "groebner";
    EulerOptions opt{req.seed, req.retries, !req.random_forms};
    emit(euler_characteristic_report(k, req.r, req.n, opt).degree, req.format);
  });
  return 0;
}

int run_table(const Request& req, Stage& stage) {
  auto desc = parse_field(req.field);
  if (desc.is_function_field()) fail(ErrorKind::UnsupportedField, "Euler characteristics need Q or F<p>");
  if (req.n_min > req.n_max) fail(ErrorKind::DimensionMismatch, "--n-min exceeds --n-max");
  visit_field(desc, [&](const auto& k) {
    stage.name = "groebner";
    EulerOptions opt{req.seed, req.retries, !req.random_forms};
    auto cells = euler_table(k, req.n_min, req.n_max, opt, !req.closed_only, !req.sequential);
    switch (req.format) {
      case Format::Json: std::cout << to_json(cells).dump(2) << "\n"; break;
      case Format::Csv: std::cout << table_csv(cells); break;
      case Format::Text: std::cout << table_text(cells); break;
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A1-degrees of polynomial maps and A1-Euler characteristics of Grassmannians"};
  app.require_subcommand(1);
  Request req;
  std::string format = "text";

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", req.field, "Q, F<p>, Q(t) or F<p>(t)")->envname("A1DEG_FIELD")->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd, bool csv) {
    std::vector<std::string> choices = {"text", "json"};
    if (csv) choices.push_back("csv");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(choices))->capture_default_str();
  };
  auto add_system = [&](CLI::App* cmd) {
    add_field(cmd);
    cmd->add_option("--vars", req.vars, "Comma-separated variable names")->required();
    cmd->add_option("--system", req.system, "Polynomials separated by ';'")->required();
    add_format(cmd, false);
  };
  auto add_euler_options = [&](CLI::App* cmd) {
    cmd->add_option("--seed", req.seed, "Seed for random linear forms")->capture_default_str();
    cmd->add_option("--retries", req.retries, "Fresh random forms tried after a non-generic choice")
        ->capture_default_str();
    cmd->add_flag("--random-forms", req.random_forms, "Skip the cyclic forms and start with random ones");
  };

  auto* global = app.add_subcommand("global", "Global A1-degree of a polynomial system");
  add_system(global);
  auto* local = app.add_subcommand("local", "Local A1-degree at a closed point");
  add_system(local);
  local->add_option("--point", req.point, "Generators of the maximal ideal, separated by ';'")->required();

  auto* euler = app.add_subcommand("euler", "A1-Euler characteristic of Gr(r, n)");
  add_field(euler);
  euler->add_option("--r", req.r, "Subspace dimension")->required();
  euler->add_option("--n", req.n, "Ambient dimension")->required();
  add_euler_options(euler);
  add_format(euler, false);

  auto* table = app.add_subcommand("table", "Table of A1-Euler characteristics of Grassmannians");
  add_field(table);
  table->add_option("--n-min", req.n_min, "First row")->capture_default_str();
  table->add_option("--n-max", req.n_max, "Last row")->capture_default_str();
  table->add_flag("--closed-only", req.closed_only, "Only evaluate the closed form");
  table->add_flag("--sequential", req.sequential, "Compute cells one at a time");
  add_euler_options(table);
  add_format(table, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  req.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  Stage stage;
  try {
    if (global->parsed()) return run_degree(req, false, stage);
    if (local->parsed()) return run_degree(req, true, stage);
    if (euler->parsed()) return run_euler(req, stage);
    return run_table(req, stage);
  } catch (const Error& e) {
    const std::string where = stage_for(e.kind(), stage);
    if (req.format == Format::Json) {
      nlohmann::ordered_json j;
      j["error"] = {{"stage", where}, {"kind", std::string(to_string(e.kind()))}, {"message", explain(e)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cerr << "a1deg: " << where << " error (" << to_string(e.kind()) << "): " << explain(e) << "\n";
    }
    return 1;
  }
}
