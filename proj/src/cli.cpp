#include "frobenius/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include "frobenius/category.hpp"
#include "frobenius/constructors.hpp"
#include "frobenius/error.hpp"
#include "frobenius/io.hpp"
#include "frobenius/structure.hpp"
#include "frobenius/version.hpp"

namespace frob::cli {

namespace {

struct Options {
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "pretty";

  double tolerance() const { return tol.value_or(kDefaultTol); }
  RunInfo info(double used_tol) const { return RunInfo{seed, used_tol}; }
};

void emit(const Json& doc, const Options& opt, std::ostream& out) {
  const std::string text =
      (opt.format == "compact" ? doc.dump() : doc.dump(2)) + "\n";
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw InputError(opt.out + ": cannot open for writing");
  file << text;
}

HilbSemigroup load_semigroup(const std::string& path, const Options& opt) {
  return semigroup_from_json(read_json_file(path), opt.tol);
}

void print_residual_table(const AxiomReport& r, std::ostream& err) {
  const std::pair<const char*, const Check*> rows[] = {
      {"associative", &r.associative},
      {"commutative", &r.commutative},
      {"frobenius_top", &r.frobenius_top},
      {"frobenius_bottom", &r.frobenius_bottom},
  };
  err << std::left << std::setw(18) << "axiom" << std::setw(14) << "residual"
      << std::setw(14) << "threshold" << "ok\n";
  for (const auto& [name, c] : rows) {
    err << std::setw(18) << name << std::setw(14) << std::setprecision(6)
        << c->residual << std::setw(14) << c->threshold
        << (c->ok ? "yes" : "no") << "\n";
  }
}

int do_check(const std::string& path, const Options& opt, std::ostream& out) {
  const HilbSemigroup s = load_semigroup(path, opt);
  const AxiomReport r = check_axioms(s);
  emit(to_json(r, opt.info(s.tol())), opt, out);
  return r.associative.ok && r.frobenius() ? kPass : kNegative;
}

int do_decompose(const std::string& path, const Options& opt,
                 std::ostream& out, std::ostream& err) {
  const HilbSemigroup s = load_semigroup(path, opt);
  try {
    emit(to_json(decompose(s, opt.seed), opt.info(s.tol())), opt, out);
    return kPass;
  } catch (const AxiomError& e) {
    const AxiomReport r = check_axioms(s);
    err << e.what() << "\n";
    print_residual_table(r, err);
    Json doc = to_json(r, opt.info(s.tol()));
    doc["error"] = e.what();
    emit(doc, opt, out);
    return kNegative;
  }
}

struct BuildArgs {
  std::string orthogonal_set;
  std::string weights;
  std::optional<std::size_t> zero;
  std::vector<std::size_t> epilogue;
  std::vector<std::string> direct_sum;
};

int do_build(const BuildArgs& b, const Options& opt, std::ostream& out) {
  const double tol = opt.tolerance();
  std::optional<HilbSemigroup> s;
  if (!b.orthogonal_set.empty()) {
    s = from_orthogonal_set(
        orthogonal_set_from_json(read_json_file(b.orthogonal_set), tol), tol);
  } else if (!b.weights.empty()) {
    s = weighted_semigroup(weights_from_json(read_json_file(b.weights)), tol);
  } else if (b.zero) {
    s = zero_semigroup(*b.zero, tol);
  } else if (!b.epilogue.empty()) {
    if (b.epilogue[0] == 0 || b.epilogue[1] >= b.epilogue[0])
      throw InputError("--epilogue: need n >= 1 and 0 <= x0 < n");
    s = epilogue_semigroup(b.epilogue[0], b.epilogue[1], tol);
  } else {
    s = direct_sum(load_semigroup(b.direct_sum[0], opt),
                   load_semigroup(b.direct_sum[1], opt));
  }
  emit(to_json(*s), opt, out);
  return kPass;
}

struct FunctorArgs {
  std::string input;
  std::string map;
  std::string dst;
};

int do_functor_min(const FunctorArgs& a, const Options& opt,
                   std::ostream& out) {
  const HilbSemigroup s = load_semigroup(a.input, opt);
  if (a.map.empty()) {
    emit(to_json(min_functor_object(s, opt.seed)), opt, out);
    return kPass;
  }
  if (a.dst.empty()) throw InputError("functor min: --map requires --dst");
  const HilbSemigroup t = load_semigroup(a.dst, opt);
  const LinearMap f = linear_map_from_json(read_json_file(a.map));
  Json doc = to_json(min_functor_morphism(f, s, t, opt.seed));
  emit(doc, opt, out);
  return kPass;
}

int do_functor_l2(const FunctorArgs& a, const Options& opt,
                  std::ostream& out) {
  const WPointedSet x = pointed_set_from_json(read_json_file(a.input));
  if (a.map.empty()) {
    emit(to_json(l2_functor_object(x, opt.tolerance())), opt, out);
    return kPass;
  }
  if (a.dst.empty()) throw InputError("functor l2: --map requires --dst");
  const WPointedSet y = pointed_set_from_json(read_json_file(a.dst));
  const WSetMorphism f =
      check_wset_morphism(point_map_from_json(read_json_file(a.map)), x, y);
  emit(linear_map_to_json(l2_functor_morphism(f)), opt, out);
  return kPass;
}

int do_classify(const std::string& map, const std::string& src,
                const std::string& dst, const Options& opt,
                std::ostream& out) {
  const HilbSemigroup s = load_semigroup(src, opt);
  const HilbSemigroup t = load_semigroup(dst, opt);
  const LinearMap f = linear_map_from_json(read_json_file(map));
  const MorphismClass c = classify_morphism(f, s, t, opt.seed);
  emit(to_json(c, opt.info(std::max(s.tol(), t.tol()))), opt, out);
  return kPass;
}

int do_roundtrip(const std::string& path, const Options& opt,
                 std::ostream& out) {
  const WPointedSet x = pointed_set_from_json(read_json_file(path));
  const RoundTripReport r = round_trips(x, opt.tolerance(), opt.seed);
  emit(to_json(r, opt.info(opt.tolerance())), opt, out);
  return r.pass() ? kPass : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hilbertian Frobenius semigroup toolkit", "frobctl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Options opt;
  double tol_value = kDefaultTol;
  CLI::Option* tol_opt =
      app.add_option("--tol", tol_value, "Relative tolerance")
          ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for randomized steps");
  app.add_option("--out", opt.out, "Write the report to this file");
  app.add_option("--format", opt.format, "pretty or compact")
      ->check(CLI::IsMember({"pretty", "compact"}));

  std::string input;
  CLI::App* check = app.add_subcommand("check", "Axiom residuals");
  check->add_option("file", input, "Semigroup document")->required();
  CLI::App* decomp = app.add_subcommand("decompose", "Structure report");
  decomp->add_option("file", input, "Semigroup document")->required();

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "Construct a semigroup");
  CLI::Option_group* sources = build->add_option_group("source");
  sources->add_option("--orthogonal-set", build_args.orthogonal_set,
                      "Orthogonal-set document");
  sources->add_option("--weights", build_args.weights, "Weight document");
  sources->add_option("--zero", build_args.zero, "Zero semigroup on C^n");
  sources->add_option("--epilogue", build_args.epilogue, "n x0")
      ->expected(2);
  sources->add_option("--direct-sum", build_args.direct_sum, "a.json b.json")
      ->expected(2);
  sources->require_option(1);

  FunctorArgs functor_args;
  CLI::App* functor = app.add_subcommand("functor", "Min and l2 functors");
  functor->require_subcommand(1);
  CLI::App* fmin = functor->add_subcommand("min", "Min of a semigroup");
  fmin->add_option("file", functor_args.input, "Semigroup document")
      ->required();
  fmin->add_option("--map", functor_args.map, "Linear map document");
  fmin->add_option("--dst", functor_args.dst, "Target semigroup document");
  CLI::App* fl2 = functor->add_subcommand("l2", "l2 of a pointed set");
  fl2->add_option("file", functor_args.input, "Pointed-set document")
      ->required();
  fl2->add_option("--map", functor_args.map, "Morphism document");
  fl2->add_option("--dst", functor_args.dst, "Target pointed-set document");

  std::string map_path, src_path, dst_path;
  CLI::App* classify = app.add_subcommand("classify", "Classify a morphism");
  classify->add_option("--map", map_path, "Linear map document")->required();
  classify->add_option("--src", src_path, "Source semigroup")->required();
  classify->add_option("--dst", dst_path, "Target semigroup")->required();

  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "Functor round trips of a pointed set");
  roundtrip->add_option("file", input, "Pointed-set document")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  for (CLI::App* sub : functor->get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  if (tol_opt->count() > 0) opt.tol = tol_value;

  try {
    if (*check) return do_check(input, opt, out);
    if (*decomp) return do_decompose(input, opt, out, err);
    if (*build) return do_build(build_args, opt, out);
    if (*fmin) return do_functor_min(functor_args, opt, out);
    if (*fl2) return do_functor_l2(functor_args, opt, out);
    if (*classify) return do_classify(map_path, src_path, dst_path, opt, out);
    if (*roundtrip) return do_roundtrip(input, opt, out);
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace frob::cli
