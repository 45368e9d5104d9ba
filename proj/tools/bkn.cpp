// bkn: rank-2 Cohen-Macaulay modules over B_{5,10} from the command line.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bkn/cli.hpp"

namespace {

int emit(const bkn::cli::Result& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-2 Cohen-Macaulay modules over the boundary algebra B_{5,10}"};
  app.require_subcommand(1);

  bkn::cli::Options opts;
  int prec = 0;
  app.add_option("--prec", prec, "truncation order (default: the file's own, 8 if absent)")->check(CLI::Range(2, 64));
  app.add_option("--oracle-prec", opts.oracle_prec, "truncation order for the brute-force oracle")
      ->capture_default_str()
      ->check(CLI::Range(2, 16));
  app.add_flag("--json", opts.json, "machine-readable output");

  std::string file_a, file_b, witness_file, batch_dir;
  std::vector<std::string> files;
  bool with_witness = false, with_oracle = false, with_lambda = false;
  int n = 10;

  auto* validate = app.add_subcommand("validate", "check a tuple file");
  validate->add_option("file", file_a)->required();

  auto* classify = app.add_subcommand("classify", "case label, profile and invariant of a tuple");
  auto* classify_file = classify->add_option("file", file_a);
  classify->add_option("--batch", batch_dir, "classify every .json file in a directory");
  classify_file->excludes(classify->get_option("--batch"));

  auto* compare = app.add_subcommand("compare", "decide isomorphism of two tuples");
  compare->add_option("a", file_a)->required();
  compare->add_option("b", file_b)->required();
  compare->add_flag("--witness", with_witness, "construct and print a verified witness");
  compare->add_flag("--oracle", with_oracle, "also run the brute-force oracle");

  auto* witness = app.add_subcommand("witness", "print an isomorphism witness as JSON");
  witness->add_option("a", file_a)->required();
  witness->add_option("b", file_b)->required();

  auto* verify = app.add_subcommand("verify", "check a witness file against two tuples");
  verify->add_option("a", file_a)->required();
  verify->add_option("b", file_b)->required();
  verify->add_option("witness", witness_file)->required();

  auto* oracle = app.add_subcommand("oracle", "hom-space dimension and isomorphism by linear algebra");
  oracle->add_option("files", files)->required()->expected(1, 2);
  oracle->add_flag("--lambda", with_lambda, "print the coefficients of an isomorphism");

  auto* families = app.add_subcommand("families", "rigid classes and family samples");

  auto* rim = app.add_subcommand("rim", "ASCII picture of a rim");
  std::string rim_a, rim_b;
  rim->add_option("rim", rim_a, "e.g. [1,4,5]")->required();
  rim->add_option("--n", n)->capture_default_str();

  auto* interlace = app.add_subcommand("interlace", "interlacing number of two rims");
  interlace->add_option("a", rim_a)->required();
  interlace->add_option("b", rim_b)->required();
  interlace->add_option("--n", n)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bkn::cli::kValidation;
  }
  if (prec > 0) opts.prec = prec;

  using namespace bkn::cli;
  if (*validate) return emit(cmd_validate(file_a, opts));
  if (*classify) {
    if (!batch_dir.empty()) return emit(cmd_batch(batch_dir, opts));
    if (file_a.empty()) return emit({kValidation, "", "error: classify needs a file or --batch DIR\n"});
    return emit(cmd_classify(file_a, opts));
  }
  if (*compare) return emit(cmd_compare(file_a, file_b, opts, with_witness, with_oracle));
  if (*witness) return emit(cmd_witness(file_a, file_b, opts));
  if (*verify) return emit(cmd_verify(file_a, file_b, witness_file, opts));
  if (*oracle) return emit(cmd_oracle(files, opts, with_lambda));
  if (*families) return emit(cmd_families(opts));
  if (*rim) return emit(cmd_rim(rim_a, n, opts));
  if (*interlace) return emit(cmd_interlace(rim_a, rim_b, n, opts));
  return kValidation;
}
