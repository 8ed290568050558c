#include "permband/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "permband/cyclic.hpp"
#include "permband/gen.hpp"
#include "permband/hook.hpp"
#include "permband/io.hpp"
#include "permband/oracle.hpp"
#include "permband/render.hpp"

namespace permband::cli {

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_arg(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string read_file_or_stdin(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

int infer_word_size(const std::vector<int>& letters) {
  int n = 1;
  for (int l : letters) n = std::max(n, l + 1);
  return n;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"banded permutation factorization toolkit", "permband"};
  app.require_subcommand(1);

  // factor
  struct {
    std::string input;
    bool cyclic = false;
    bool pad = false;
    bool matrix = false;
    std::string format = "text";
  } fo;
  auto* factor = app.add_subcommand("factor", "factor a permutation into bandwidth-1 layers");
  factor->add_option("perm", fo.input, "one-line permutation (or - for stdin)")->required();
  factor->add_flag("--cyclic", fo.cyclic, "factor cyclically: layers plus a residual shift");
  factor->add_flag("--pad", fo.pad, "pad with identity layers to exactly 2w-1 layers");
  factor->add_flag("--matrix", fo.matrix, "read a dense 0/1 permutation matrix instead");
  factor->add_option("--format", fo.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  factor->callback([&] {
    const std::string text = read_arg(fo.input, in);
    const Permutation p = fo.matrix ? parse_matrix(text) : parse_permutation(text);
    const Factorization f = fo.cyclic ? cyclic_factor(p, fo.pad) : hook_factor(p, fo.pad);
    if (!verify_factorization(p, f))
      throw VerificationFailure("factorization failed its recomposition self-check");
    if (fo.format == "json")
      out << to_json(make_document(p, f));
    else
      out << to_text(f);
  });

  // mset
  struct {
    std::string input;
  } mo;
  auto* msetcmd = app.add_subcommand("mset", "print the inversion diagonal set M");
  msetcmd->add_option("perm", mo.input, "one-line permutation (or - for stdin)")->required();
  msetcmd->callback([&] {
    out << join(mset(parse_permutation(read_arg(mo.input, in)))) << "\n";
  });

  // bandwidth
  struct {
    std::string input;
    bool cyclic = false;
  } bo;
  auto* bw = app.add_subcommand("bandwidth", "print the bandwidth of a permutation");
  bw->add_option("perm", bo.input, "one-line permutation (or - for stdin)")->required();
  bw->add_flag("--cyclic", bo.cyclic, "cyclic bandwidth (band of the canonical lift)");
  bw->callback([&] {
    const Permutation p = parse_permutation(read_arg(bo.input, in));
    out << (bo.cyclic ? cyclic_bandwidth(p) : bandwidth(p)) << "\n";
  });

  // min
  struct {
    std::string input;
    bool oracle = false;
    bool cyclic = false;
    std::optional<int> max_n;
  } no;
  auto* mincmd = app.add_subcommand("min", "minimal bandwidth-1 factor count (brute force)");
  mincmd->add_option("perm", no.input, "one-line permutation (or - for stdin)")->required();
  mincmd->add_flag("--oracle", no.oracle, "acknowledge the exhaustive BFS cost")->required();
  mincmd->add_flag("--cyclic", no.cyclic, "use cyclic generators (including shifts)");
  mincmd->add_option("--max-n", no.max_n, "override the BFS size cap");
  mincmd->callback([&] {
    const Permutation p = parse_permutation(read_arg(no.input, in));
    const BfsResult r =
        min_factors(p, no.cyclic ? Flavor::cyclic : Flavor::finite, no.max_n);
    out << r.min_length << "\n";
  });

  // reduce-word
  struct {
    std::string input;
    std::optional<int> n;
  } ro;
  auto* reduce = app.add_subcommand("reduce-word", "reduce a transposition word");
  reduce->add_option("word", ro.input, "letters, space-separated (or - for stdin)")->required();
  reduce->add_option("-n", ro.n, "number of strands (default: max letter + 1)");
  reduce->callback([&] {
    const std::vector<int> letters = parse_int_list(read_arg(ro.input, in));
    const Word w{ro.n.value_or(infer_word_size(letters)), letters};
    out << join(reduce_word(w).letters) << "\n";
  });

  // gen
  struct {
    int n = 0;
    int w = 0;
    std::uint64_t seed = 0;
    bool cyclic = false;
  } go;
  auto* gen = app.add_subcommand("gen", "generate a pseudo-random banded permutation");
  gen->add_option("-n", go.n, "permutation size")->required();
  gen->add_option("-w", go.w, "bandwidth bound")->required();
  gen->add_option("--seed", go.seed, "PRNG seed");
  gen->add_flag("--cyclic", go.cyclic, "cyclically banded instance");
  gen->callback([&] {
    const GenConfig cfg{go.n, go.w, go.seed,
                        go.cyclic ? Flavor::cyclic : Flavor::finite};
    const Permutation p = random_banded(cfg);
    out << join(p.one_line()) << "\n";
    err << "prng=" << kPrngId << " seed=" << cfg.seed << " n=" << cfg.n
        << " w=" << cfg.w << " flavor=" << to_string(cfg.flavor) << "\n";
  });

  // render
  struct {
    std::string input;
    bool hook = false;
    bool wiring = false;
    std::string svg_path;
    bool ascii = false;
    bool indices = false;
    bool diagonals = false;
    std::optional<int> n;
  } re;
  auto* render = app.add_subcommand("render", "draw a hook or wiring diagram");
  render->add_option("input", re.input, "permutation (--hook) or word letters (--wiring)")
      ->required();
  render->add_flag("--hook", re.hook, "hook diagram of a permutation");
  render->add_flag("--wiring", re.wiring, "wiring diagram of a word");
  render->add_option("--svg", re.svg_path, "write SVG to this path");
  render->add_flag("--ascii", re.ascii, "ASCII art on stdout (default)");
  render->add_flag("--indices", re.indices, "label crossings with transposition indices");
  render->add_flag("--diagonals", re.diagonals, "draw the diagonals c - r = k");
  render->add_option("-n", re.n, "strand count for --wiring (default: max letter + 1)");
  render->callback([&] {
    if (re.hook == re.wiring)
      throw std::invalid_argument("render: exactly one of --hook or --wiring is required");
    if (!re.svg_path.empty() && re.ascii)
      throw std::invalid_argument("render: --svg and --ascii are mutually exclusive");
    RenderOptions opts;
    opts.format = re.svg_path.empty() ? RenderFormat::ascii : RenderFormat::svg;
    opts.show_indices = re.indices;
    opts.show_diagonals = re.diagonals;
    std::string doc;
    if (re.hook) {
      doc = render_hook(parse_permutation(read_arg(re.input, in)), opts);
    } else {
      const std::vector<int> letters = parse_int_list(read_arg(re.input, in));
      doc = render_wiring(Word{re.n.value_or(infer_word_size(letters)), letters}, opts);
    }
    if (re.svg_path.empty()) {
      out << doc;
    } else {
      std::ofstream file(re.svg_path);
      if (!file) throw std::invalid_argument("cannot write to '" + re.svg_path + "'");
      file << doc;
    }
  });

  // verify
  struct {
    std::string doc;
    std::string perm;
  } vo;
  auto* verify = app.add_subcommand("verify", "check a factorization document against a permutation");
  verify->add_option("document", vo.doc, "JSON factorization document path (or - for stdin)")
      ->required();
  verify->add_option("perm", vo.perm, "one-line permutation (or - for stdin)")->required();
  verify->callback([&] {
    const FactorizationDocument d = document_from_json(read_file_or_stdin(vo.doc, in));
    const Permutation p = parse_permutation(read_arg(vo.perm, in));
    if (!verify_factorization(p, d.factorization))
      throw VerificationFailure("factorization does not recompose to the stated permutation");
    out << "ok\n";
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace permband::cli
