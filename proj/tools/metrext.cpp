// command line front end: extend, verify, compare, gen
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <metrext/metrext.hpp>

namespace {

using namespace metrext;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

PairFunction load_pair_file(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j = json::parse(in);
  const json& body = j.is_object() && j.contains("p") ? j.at("p") : j;
  return PairFunction::from_flat(PairDomain::OverX, k,
                                 detail::parse_flat_matrix(body, k, "p"));
}

PairFunction resolve_p(const Instance& inst, const std::string& p_path) {
  if (!p_path.empty()) return load_pair_file(p_path, inst.subset.size());
  if (inst.p) return *inst.p;
  throw std::runtime_error(
      "no pair function: the instance has no \"p\" field and --p was not given");
}

json result_to_json(const ExtensionResult& r, int n) {
  json j;
  j["operator"] = r.operator_name;
  j["variant"] = to_string(r.variant);
  j["stabilization_level"] = r.stabilization_level;
  j["scale"] = r.scale;
  j["n"] = n;
  j["matrix"] = r.output.flat();
  if (!r.tails.empty()) j["tails"] = r.tails;
  return j;
}

std::string result_to_csv(const ExtensionResult& r, int n) {
  std::string out = "y";
  for (int j = 0; j < n; ++j) out += "," + std::to_string(j);
  out += "\n";
  for (int i = 0; i < n; ++i) {
    out += std::to_string(i);
    for (int j = 0; j < n; ++j) out += "," + fmt17(r.output.at(i, j));
    out += "\n";
  }
  return out;
}

void print_warnings(const Instance& inst) {
  for (const std::string& w : inst.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_extend(const std::string& in, const std::string& op_name,
               const std::string& variant_name, const std::string& out,
               const std::string& format, const std::string& p_path, int depth) {
  const Instance inst = load_instance(in);
  print_warnings(inst);
  const Operator op = operator_from_string(op_name);
  const DiagVariant variant = diag_variant_from_string(variant_name);
  const PairFunction p = resolve_p(inst, p_path);
  Extender ext(inst.space, inst.subset);

  ExtensionResult res = [&] {
    switch (op) {
      case Operator::T: return ext.extend_T(p, variant);
      case Operator::S:
      case Operator::S1:
      case Operator::S2: return ext.extend_S_family(p, op);
      case Operator::I:
        if (!inst.group) throw std::runtime_error("operator I requires a group");
        return extend_invariant(ext, p, *inst.group, variant);
    }
    throw std::logic_error("unreachable");
  }();

  const int n = inst.space.size();
  if (format == "csv") {
    write_text(out, result_to_csv(res, n));
    return 0;
  }
  json j = result_to_json(res, n);
  if (depth >= 0) {
    // truncated partial sums as a convergence diagnostic; never replaces "matrix"
    if (op != Operator::T && op != Operator::I)
      throw std::runtime_error("--depth applies to the series operators T and I");
    PairFunction partial(PairDomain::OverY, n);
    for (int y = 0; y < n; ++y)
      for (int yp = 0; yp < n; ++yp) {
        double acc = 0.0;
        for (int lvl = 1; lvl <= depth; ++lvl)
          acc += std::ldexp(ext.compute_Tn(p, y, yp, lvl, variant), -lvl);
        partial.at(y, yp) = acc;
      }
    if (op == Operator::I) partial = average_pairs(partial, *inst.group);
    json diag;
    diag["depth"] = depth;
    diag["partial_matrix"] = partial.flat();
    j["diagnostic"] = diag;
  }
  write_text(out, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& in, const std::string& op_name,
               const std::string& variant_name, std::uint64_t seed, int trials,
               const std::string& out) {
  const Instance inst = load_instance(in);
  print_warnings(inst);
  const Operator op = operator_from_string(op_name);
  const DiagVariant variant = diag_variant_from_string(variant_name);
  if (op == Operator::I && !inst.group)
    throw std::runtime_error("operator I requires a group");
  const auto reps = run_invariant_suite(inst, op, variant, seed, trials);
  std::cout << "operator " << to_string(op) << ", variant " << to_string(variant)
            << ", seed " << seed << ", trials " << trials << "\n"
            << format_report_table(reps);
  const bool ok = all_required_pass(reps);
  std::cout << (ok ? "result: all required checks passed"
                   : "result: required checks FAILED")
            << "\n";
  if (!out.empty()) {
    json j;
    j["operator"] = to_string(op);
    j["variant"] = to_string(variant);
    j["seed"] = seed;
    j["trials"] = trials;
    j["checks"] = reports_to_json(reps);
    j["all_required_pass"] = ok;
    write_text(out, j.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

int cmd_compare(const std::string& in, std::uint64_t seed, int trials,
                const std::string& p_path) {
  const Instance inst = load_instance(in);
  print_warnings(inst);
  const Operator ops[] = {Operator::T, Operator::S, Operator::S1, Operator::S2};

  std::vector<std::vector<CheckReport>> suites;
  for (Operator op : ops)
    suites.push_back(run_invariant_suite(inst, op, DiagVariant::BaseDiagonal, seed, trials));

  std::vector<std::string> names;
  for (const auto& r : suites[0]) names.push_back(r.check);
  std::size_t name_w = 0;
  for (const auto& s : names) name_w = std::max(name_w, s.size());

  std::cout << "per-claim status (seed " << seed << ", trials " << trials << ")\n";
  std::string head(name_w + 2, ' ');
  std::cout << head << "T               S               S1              S2\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::cout << names[i] << std::string(name_w + 2 - names[i].size(), ' ');
    for (int c = 0; c < 4; ++c) {
      std::string st = to_string(suites[c][i].status);
      if (suites[c][i].status == CheckStatus::Fail && suites[c][i].expected_fail)
        st = "expected-fail";
      std::cout << st << std::string(st.size() < 16 ? 16 - st.size() : 1, ' ');
    }
    std::cout << "\n";
  }

  PairFunction p(PairDomain::OverX, inst.subset.size());
  std::string p_source;
  if (!p_path.empty()) {
    p = load_pair_file(p_path, inst.subset.size());
    p_source = "--p file";
  } else if (inst.p) {
    p = *inst.p;
    p_source = "instance \"p\" field";
  } else {
    Rng rng(seed);
    p = random_metric(rng, PairDomain::OverX, inst.subset.size());
    p_source = "random metric from seed";
  }

  Extender ext(inst.space, inst.subset);
  std::vector<PairFunction> outs;
  outs.push_back(ext.extend_T(p, DiagVariant::BaseDiagonal).output);
  outs.push_back(ext.extend_S_family(p, Operator::S).output);
  outs.push_back(ext.extend_S_family(p, Operator::S1).output);
  outs.push_back(ext.extend_S_family(p, Operator::S2).output);

  std::cout << "\npairwise Frobenius distances on one input (" << p_source << ")\n";
  const char* tags[] = {"T", "S", "S1", "S2"};
  const int n = inst.space.size();
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      double acc = 0.0;
      for (int y = 0; y < n; ++y)
        for (int yp = 0; yp < n; ++yp) {
          const double d = outs[a].at(y, yp) - outs[b].at(y, yp);
          acc += d * d;
        }
      std::cout << "  |" << tags[a] << " - " << tags[b]
                << "|_F = " << fmt17(std::sqrt(acc)) << "\n";
    }

  bool ok = true;
  for (const auto& s : suites) ok = ok && all_required_pass(s);
  return ok ? 0 : 1;
}

int cmd_gen(int n, int x, int dim, bool matrix_mode, bool group_mode,
            std::uint64_t seed, const std::string& out) {
  Rng rng(seed);
  Instance inst = [&] {
    if (group_mode) return random_group_instance(rng);
    if (matrix_mode) return random_matrix_instance(rng, n, x);
    return random_point_instance(rng, n, x, dim);
  }();
  print_warnings(inst);
  write_text(out, instance_to_json(inst).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear extension of metrics from a subset of a finite metric space"};
  app.require_subcommand(1);

  std::string in, out, op_name, p_path;
  std::string variant_name = "base-diagonal";
  std::string format = "json";
  std::uint64_t seed = 0;
  int trials = 20, depth = -1;
  int n = 8, x = 3, dim = 2;
  bool matrix_mode = false, group_mode = false;

  CLI::App* ext = app.add_subcommand("extend", "extend a pair function to the whole space");
  ext->add_option("-i,--instance", in, "instance JSON file")->required();
  ext->add_option("--op", op_name, "operator: T, S, S1, S2 or I")->required();
  ext->add_option("--variant", variant_name, "base-diagonal or zero-diagonal");
  ext->add_option("-o,--output", out, "output file (default stdout)");
  ext->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  ext->add_option("--p", p_path, "pair function JSON file (overrides instance)");
  ext->add_option("--depth", depth, "also report the series truncated at this level");

  CLI::App* ver = app.add_subcommand("verify", "run the property suite for one operator");
  ver->add_option("-i,--instance", in, "instance JSON file")->required();
  ver->add_option("--op", op_name, "operator: T, S, S1, S2 or I")->required();
  ver->add_option("--variant", variant_name, "base-diagonal or zero-diagonal");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--trials", trials, "random trials per check")
      ->check(CLI::PositiveNumber);
  ver->add_option("-o,--output", out, "also write a JSON report here");

  CLI::App* cmp = app.add_subcommand("compare", "contrast T, S, S1 and S2 on one instance");
  cmp->add_option("-i,--instance", in, "instance JSON file")->required();
  cmp->add_option("--seed", seed, "random seed");
  cmp->add_option("--trials", trials, "random trials per check")
      ->check(CLI::PositiveNumber);
  cmp->add_option("--p", p_path, "pair function JSON file for the distance table");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", n, "number of points");
  gen->add_option("--x", x, "subset size (2 <= x <= n)");
  gen->add_option("--dim", dim, "coordinate dimension")->check(CLI::PositiveNumber);
  gen->add_flag("--matrix", matrix_mode, "generate a distance matrix instead of points");
  gen->add_flag("--group", group_mode, "generate a symmetric instance with a group (ignores --n/--x/--dim)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--output", out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ext->parsed())
      return cmd_extend(in, op_name, variant_name, out, format, p_path, depth);
    if (ver->parsed()) return cmd_verify(in, op_name, variant_name, seed, trials, out);
    if (cmp->parsed()) return cmd_compare(in, seed, trials, p_path);
    if (gen->parsed()) return cmd_gen(n, x, dim, matrix_mode, group_mode, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
