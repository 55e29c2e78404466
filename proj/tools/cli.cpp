#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "boxcert/closure.hpp"
#include "boxcert/errors.hpp"
#include "boxcert/factory.hpp"
#include "boxcert/json_io.hpp"
#include "boxcert/pipeline.hpp"
#include "boxcert/svg.hpp"

namespace boxcert::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BOXCERT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("BOXCERT_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

struct GenArgs {
  std::string gens;
  std::string gens_file;
  std::string bound;

  void attach(CLI::App* cmd) {
    cmd->add_option("--gens", gens, "comma-separated generators, e.g. 17,10,7 or 1/2,3");
    cmd->add_option("--gens-file", gens_file, "generator JSON {\"gens\": [...], \"bound\": ...}");
    cmd->add_option("--bound", bound, "closure bound (p/q)");
  }

  GeneratorSpec resolve() const {
    GeneratorSpec spec;
    if (!gens_file.empty()) {
      spec = generator_spec_from_json(parse_json(read_file(gens_file)));
    } else if (!gens.empty()) {
      try {
        spec.gens = GeneratorSet(parse_rat_list(gens));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    } else {
      throw ParseError("one of --gens or --gens-file is required");
    }
    if (!bound.empty()) spec.bound = Rat::parse(bound);
    return spec;
  }
};

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const InvalidPartition*>(&e)) return kInvalid;
  if (dynamic_cast<const HypothesisViolated*>(&e)) return kHypothesisViolated;
  if (dynamic_cast<const InvariantFailure*>(&e)) return kInternalFailure;
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const RenderUnsupported*>(&e)) {
    return kParseError;
  }
  return kInternalFailure;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const Partition p = parse_partition(read_file(file));
  const ValidationReport report = validate_partition(p);
  out << report.summary() << "\n";
  return report.ok() ? kOk : kInvalid;
}

struct CertifyArgs {
  std::vector<std::string> files;
  GenArgs gens;
  std::string start;
  std::string out;
  std::string out_dir;
  int jobs = 1;
};

// Output of one file, buffered so batch runs print in filename order.
struct CertifyOutcome {
  int code = kOk;
  std::string out;
  std::string err;
};

CertifyOutcome certify_one(const std::string& file, const GeneratorSpec& spec,
                           const CertifyArgs& args, bool batch) {
  CertifyOutcome result;
  const std::string prefix = batch ? file + ": " : "";
  try {
    const Partition p = parse_partition(read_file(file));
    CertifyOptions options;
    options.bound = spec.bound;
    if (!args.start.empty()) {
      options.start = Point{parse_rat_list(args.start)};
      if (options.start->dim() != p.dim) throw ParseError("--start-corner has the wrong dimension");
    }
    const Certificate cert = certify(p, spec.gens, options);
    const std::string text = pretty_json(to_json(cert));
    if (!args.out.empty()) {
      write_file(args.out, text);
    } else if (!args.out_dir.empty()) {
      const auto stem = std::filesystem::path(file).stem().string();
      write_file((std::filesystem::path(args.out_dir) / (stem + ".cert.json")).string(), text);
    }
    std::ostringstream os;
    os << prefix << "side of length " << cert.claimed.length << " along axis " << cert.claimed.axis
       << " ∈ closure(" << spec.gens.str() << ")\n";
    os << prefix << "derivation: " << to_string(cert.reduction.derivation) << "\n";
    result.out = os.str();
  } catch (const Error& e) {
    result.code = exit_code_for(e);
    result.err = prefix + "[" + e.stage() + "] " + e.what() + "\n";
  }
  return result;
}

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
  const GeneratorSpec spec = args.gens.resolve();
  std::vector<std::string> files = args.files;
  const bool batch = files.size() > 1;
  if (batch && !args.out.empty()) throw ParseError("--out takes a single input; use --out-dir");
  if (batch) std::sort(files.begin(), files.end());

  std::vector<CertifyOutcome> outcomes(files.size());
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(args.jobs, 1)), 1, files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = certify_one(files[i], spec, args, batch);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int code = kOk;
  for (const auto& o : outcomes) {
    out << o.out;
    err << o.err;
    code = std::max(code, o.code);
  }
  return code;
}

int cmd_check(const std::string& cert_file, const std::string& partition_file, const GenArgs& gens,
              std::ostream& out) {
  const Partition p = parse_partition(read_file(partition_file));
  const GeneratorSpec spec = gens.resolve();
  const Certificate cert = parse_certificate(read_file(cert_file));
  const CheckResult result = check_certificate(cert, p, spec.gens);
  if (result.ok) {
    out << "ACCEPTED: side of length " << cert.claimed.length << " along axis " << cert.claimed.axis
        << "\n";
    return kOk;
  }
  out << "REJECTED\n";
  for (const auto& r : result.reasons) out << "  " << r << "\n";
  return kInvalid;
}

int cmd_closure(const GenArgs& gens, std::ostream& out, std::ostream& err) {
  const GeneratorSpec spec = gens.resolve();
  if (!spec.bound) throw ParseError("closure needs --bound");
  const BoundedClosure c = bounded_closure(spec.gens, *spec.bound);
  if (!c.warning().empty()) err << "warning: " << c.warning() << "\n";
  for (std::size_t i = 0; i < c.elements().size(); ++i) out << (i ? " " : "") << c.elements()[i];
  out << "\n";
  return kOk;
}

int cmd_member(const GenArgs& gens, const std::string& value, std::ostream& out) {
  GeneratorSpec spec = gens.resolve();
  const Rat v = Rat::parse(value);
  const Rat bound = spec.bound.value_or(v);
  const auto d = membership(spec.gens, bound, v);
  if (!d) {
    out << "not a member\n";
    return kNotMember;
  }
  out << pretty_json(to_json(*d));
  return kOk;
}

struct GenCmdArgs {
  std::string kind;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;
  std::size_t dim = 2;
  std::size_t depth = 4;
  std::int64_t denom = 6;
  std::string lift;
  std::string hypothesis_out;
};

int cmd_gen(const GenCmdArgs& a, std::ostream& out) {
  std::vector<Rat> values;
  for (const auto& s : a.params) values.push_back(Rat::parse(s));
  auto need = [&](std::size_t n) {
    if (values.size() != n) {
      throw ParseError(a.kind + " takes " + std::to_string(n) + " parameters");
    }
  };
  const std::uint64_t seed = a.seed.value_or(default_seed());
  Partition p;
  if (a.kind == "strip") {
    need(2);
    p = strip_partition(values[0], values[1]);
  } else if (a.kind == "pinwheel") {
    need(3);
    p = pinwheel_partition(values[0], values[1], values[2]);
  } else if (a.kind == "guillotine") {
    need(0);
    p = random_guillotine(GuillotineOptions{a.dim, a.depth, a.denom}, seed);
  } else {
    throw ParseError("unknown partition kind \"" + a.kind + "\" (strip, pinwheel, guillotine)");
  }
  if (!a.lift.empty()) {
    const auto comma = a.lift.find(',');
    if (comma == std::string::npos) throw ParseError("--lift expects n,L");
    std::size_t n = 0;
    try {
      n = std::stoul(a.lift.substr(0, comma));
    } catch (const std::exception&) {
      throw ParseError("--lift expects n,L");
    }
    p = lift_product(p, Rat::parse(a.lift.substr(comma + 1)), n);
  }
  if (!a.hypothesis_out.empty()) {
    auto [_, gens] = hypothesis_instance(p, seed);
    write_file(a.hypothesis_out, pretty_json(to_json(GeneratorSpec{gens, std::nullopt})));
  }
  out << pretty_json(to_json(p));
  return kOk;
}

struct RenderArgs {
  std::string file;
  std::string cert;
  std::string out;
  int scale = 10;
  bool no_trail = false;
  bool no_labels = false;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const Partition p = parse_partition(read_file(a.file));
  std::optional<Certificate> cert;
  if (!a.cert.empty()) cert = parse_certificate(read_file(a.cert));
  const std::string svg =
      render_svg(p, cert ? &*cert : nullptr, RenderSpec{a.scale, !a.no_trail, !a.no_labels});
  if (a.out.empty()) {
    out << svg;
  } else {
    write_file(a.out, svg);
  }
  return kOk;
}

}  // namespace

int selftest(std::ostream& out) {
  struct Case {
    std::string name;
    Partition partition;
    GeneratorSet gens;
    Rat expected;
    Derivation::Op root;
  };
  const Rat x(17), y(10), z(7);
  const std::vector<Case> cases = {
      {"strip(15,5)", strip_partition(15, 5), GeneratorSet({15, 5}), 20, Derivation::Op::Sum},
      {"strip(1,1)", strip_partition(1, 1), GeneratorSet({1}), 2, Derivation::Op::Sum},
      {"strip(15,5) x [0,20]", lift_product(strip_partition(15, 5), 20, 3), GeneratorSet({15, 5}), 20,
       Derivation::Op::Sum},
      {"pinwheel(17,10,7)", pinwheel_partition(x, y, z), GeneratorSet({x, y, z}), 20, Derivation::Op::Triple},
      {"pinwheel(5/2,7/3,1/2)", pinwheel_partition(Rat(5, 2), Rat(7, 3), Rat(1, 2)),
       GeneratorSet({Rat(5, 2), Rat(7, 3), Rat(1, 2)}), Rat(13, 3), Derivation::Op::Triple},
      {"pinwheel(17,10,7) x [0,20]", lift_product(pinwheel_partition(x, y, z), 20, 3),
       GeneratorSet({x, y, z}), 20, Derivation::Op::Triple},
      {"pinwheel(17,10,7) x [0,20]^2", lift_product(pinwheel_partition(x, y, z), 20, 4),
       GeneratorSet({x, y, z}), 20, Derivation::Op::Triple},
  };

  out << std::left << std::setw(30) << "case" << std::setw(10) << "expected" << std::setw(10)
      << "certified" << std::setw(36) << "derivation" << "status\n";
  bool all = true;
  for (const Case& c : cases) {
    std::string certified = "-";
    std::string derivation = "-";
    bool pass = false;
    try {
      const Certificate cert = certify(c.partition, c.gens);
      certified = cert.claimed.length.str();
      derivation = to_string(cert.reduction.derivation);
      pass = cert.claimed.length == c.expected && cert.reduction.derivation.op == c.root &&
             check_certificate(cert, c.partition, c.gens).ok;
    } catch (const Error& e) {
      derivation = std::string("[") + e.stage() + "] error";
    }
    all = all && pass;
    out << std::left << std::setw(30) << c.name << std::setw(10) << c.expected.str() << std::setw(10)
        << certified << std::setw(36) << derivation << (pass ? "PASS" : "FAIL") << "\n";
  }
  out << (all ? "all witness partitions certified\n" : "witness suite FAILED\n");
  return all ? kOk : kInternalFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for sides of box partitions"};
  app.name(args.empty() ? "boxcert" : args[0]);
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "check that a partition file is an exact partition");
  validate->add_option("file", validate_file)->required();

  CertifyArgs certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "derive a side of the outer box from the generators");
  certify_cmd->add_option("files", certify_args.files, "partition JSON file(s)")->required();
  certify_args.gens.attach(certify_cmd);
  certify_cmd->add_option("--start-corner", certify_args.start, "comma-separated corner, default outer.lo");
  certify_cmd->add_option("--out", certify_args.out, "write the certificate JSON here");
  certify_cmd->add_option("--out-dir", certify_args.out_dir, "batch mode: write <stem>.cert.json files here");
  certify_cmd->add_option("--jobs", certify_args.jobs, "parallel workers in batch mode")->check(CLI::PositiveNumber);

  std::string check_cert, check_partition;
  GenArgs check_gens;
  auto* check = app.add_subcommand("check", "independently verify a certificate");
  check->add_option("certificate", check_cert)->required();
  check->add_option("partition", check_partition)->required();
  check_gens.attach(check);

  GenArgs closure_gens;
  auto* closure = app.add_subcommand("closure", "list the bounded closure of a generator set");
  closure_gens.attach(closure);

  GenArgs member_gens;
  std::string member_value;
  auto* member = app.add_subcommand("member", "print a derivation of a value, exit 5 if none");
  member_gens.attach(member);
  member->add_option("--value", member_value)->required();

  GenCmdArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a partition: strip X Y | pinwheel X Y Z | guillotine");
  gen->add_option("kind", gen_args.kind)->required();
  gen->add_option("params", gen_args.params);
  gen->add_option("--seed", gen_args.seed, "random seed (default: $BOXCERT_SEED or 1)");
  gen->add_option("--dim", gen_args.dim, "guillotine dimension")->check(CLI::Range(2, 16));
  gen->add_option("--depth", gen_args.depth, "guillotine maximum depth");
  gen->add_option("--denom", gen_args.denom, "guillotine coordinate denominator bound")->check(CLI::PositiveNumber);
  gen->add_option("--lift", gen_args.lift, "n,L: multiply by [0,L]^(n-2)");
  gen->add_option("--hypothesis-out", gen_args.hypothesis_out, "also write a generator set satisfying the hypothesis");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "draw a 2D partition as SVG");
  render->add_option("file", render_args.file)->required();
  render->add_option("--cert", render_args.cert, "overlay this certificate's trail");
  render->add_option("--scale", render_args.scale, "pixels per unit")->check(CLI::PositiveNumber);
  render->add_option("--out", render_args.out, "write SVG here instead of stdout");
  render->add_flag("--no-trail", render_args.no_trail);
  render->add_flag("--no-labels", render_args.no_labels);

  auto* selftest_cmd = app.add_subcommand("selftest", "certify the witness partitions");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*validate) return cmd_validate(validate_file, out);
    if (*certify_cmd) return cmd_certify(certify_args, out, err);
    if (*check) return cmd_check(check_cert, check_partition, check_gens, out);
    if (*closure) return cmd_closure(closure_gens, out, err);
    if (*member) return cmd_member(member_gens, member_value, out);
    if (*gen) return cmd_gen(gen_args, out);
    if (*render) return cmd_render(render_args, out);
    if (*selftest_cmd) return selftest(out);
  } catch (const Error& e) {
    err << "[" << e.stage() << "] " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kParseError;
}

}  // namespace boxcert::cli
