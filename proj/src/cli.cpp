#include "orthogen/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthogen/core.hpp"
#include "orthogen/error.hpp"
#include "orthogen/matrix_io.hpp"
#include "orthogen/presets.hpp"
#include "orthogen/quantize.hpp"
#include "orthogen/transform.hpp"

namespace orthogen::cli {

namespace {

// Matrix source options shared by the subcommands. Only transform accepts a file.
struct MatrixSource {
  std::string values;
  std::string preset;
  std::size_t size = 0;
  std::string matrixPath;
};

void addSourceOptions(CLI::App* cmd, MatrixSource& src, bool allowFile) {
  auto* v = cmd->add_option("--values", src.values, "comma-separated distinct positive generating values");
  auto* p = cmd->add_option("--preset", src.preset, "dct | dtt | triangular | prime | fibonacci");
  cmd->add_option("--size", src.size, "matrix size n (even) for --preset");
  v->excludes(p);
  if (allowFile) {
    auto* f = cmd->add_option("--matrix", src.matrixPath, "read the transform matrix from a CSV/JSON file");
    f->excludes(v)->excludes(p);
  }
}

std::vector<double> parseValueList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto a = tok.find_first_not_of(" \t");
    const auto b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw Error(ErrorKind::DegenerateValues, "empty entry in --values");
    std::string_view t(tok.data() + a, b - a + 1);
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double v = 0.0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
      throw Error(ErrorKind::DegenerateValues, "cannot parse value '" + std::string(t) + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::DegenerateValues, "--values is empty");
  return out;
}

std::optional<Preset> resolvePreset(const MatrixSource& src) {
  if (src.preset.empty()) return std::nullopt;
  return parsePreset(src.preset);
}

ValueSet resolveValues(const MatrixSource& src) {
  if (auto p = resolvePreset(src)) {
    if (src.size == 0) throw Error(ErrorKind::InvalidArgument, "--preset requires --size");
    return presetValues({*p, src.size});
  }
  if (src.values.empty()) throw Error(ErrorKind::InvalidArgument, "one of --values or --preset is required");
  return ValueSet(parseValueList(src.values));
}

GenerateOptions optionsFromEnv() {
  GenerateOptions opts;
  if (const char* env = std::getenv("ORTHOGEN_MAX_M")) {
    std::size_t v = 0;
    const std::string_view s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v == 0) {
      throw Error(ErrorKind::InvalidArgument, "ORTHOGEN_MAX_M must be a positive integer");
    }
    opts.softMaxM = v;
  }
  return opts;
}

OrthoMatrix resolveMatrix(const MatrixSource& src) {
  if (!src.matrixPath.empty()) {
    DenseMatrix m = parseMatrix(readFile(src.matrixPath));
    return OrthoMatrix{std::move(m), {}, {}, {}};
  }
  return assembleMatrix(resolveValues(src), optionsFromEnv());
}

void emit(const std::string& text, const std::string& outPath, std::ostream& out) {
  if (outPath.empty()) {
    out << text;
  } else {
    writeFile(outPath, text);
  }
}

std::string defaultMacroName(const MatrixSource& src, std::size_t n) {
  const std::string size = std::to_string(n);
  if (src.preset.empty()) return "DEFINE_MATRIX_P" + size;
  if (src.preset == "dct") return "DEFINE_DCT2_P" + size + "_MATRIX";
  std::string up = src.preset;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return "DEFINE_" + up + "_P" + size + "_MATRIX";
}

void printWarnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

int cmdGenerate(const MatrixSource& src, const std::string& format, const std::string& outPath, std::ostream& out,
                std::ostream& err) {
  if (format == "c-header") {
    err << "error: c-header output is only available for integer matrices (use quantize)\n";
    return kBadInput;
  }
  const ValueSet vs = resolveValues(src);
  const OrthoMatrix m = assembleMatrix(vs, optionsFromEnv());
  printWarnings(m.warnings, err);

  std::string text;
  if (format == "pretty") {
    text = toPretty(m.entries);
  } else if (format == "csv") {
    text = toCsv(m.entries);
  } else {
    const ReducedBasis basis = inductBasis(vs);
    text = toJson(m, &basis);
  }
  emit(text, outPath, out);
  return kOk;
}

int cmdQuantize(const MatrixSource& src, const std::string& scaleText, const std::string& format,
                const std::string& macro, const std::string& outPath, std::ostream& out, std::ostream& err) {
  const OrthoMatrix m = assembleMatrix(resolveValues(src), optionsFromEnv());
  printWarnings(m.warnings, err);

  double scale = 0.0;
  if (scaleText == "auto") {
    scale = autoScale(m.n());
  } else {
    auto res = std::from_chars(scaleText.data(), scaleText.data() + scaleText.size(), scale);
    if (res.ec != std::errc() || res.ptr != scaleText.data() + scaleText.size() || !(scale > 0.0)) {
      err << "error: --scale must be 'auto' or a positive number, got '" << scaleText << "'\n";
      return kBadInput;
    }
  }
  const IntMatrix im = quantizeMatrix(m, scale);

  std::string text;
  if (format == "pretty") {
    text = toPretty(im);
  } else if (format == "csv") {
    text = toCsv(im);
  } else if (format == "json") {
    text = toJson(im);
  } else {
    text = toCHeader(im, macro.empty() ? defaultMacroName(src, m.n()) : macro);
  }
  emit(text, outPath, out);
  return kOk;
}

int cmdVerify(const std::string& path, double tolerance, double scale, bool requireParity, const std::string& format,
              std::ostream& out) {
  const DenseMatrix m = parseMatrix(readFile(path));
  const VerifyReport r = verifyMatrix(m, tolerance, scale);
  const bool pass = r.orthogonalityResidual <= tolerance && (!requireParity || r.parityOK);

  if (format == "json") {
    nlohmann::json doc;
    doc["orthogonalityResidual"] = r.orthogonalityResidual;
    doc["worstPair"] = {r.worstRow, r.worstCol};
    doc["rowNormMaxDev"] = r.rowNormMaxDev;
    doc["parityOK"] = r.parityOK;
    doc["conditionWarnings"] = r.conditionWarnings;
    doc["tolerance"] = tolerance;
    doc["pass"] = pass;
    out << doc.dump(2) << "\n";
  } else {
    out << "orthogonality residual: " << formatShortest(r.orthogonalityResidual) << " at (" << r.worstRow << ", "
        << r.worstCol << ")\n";
    out << "row norm max deviation: " << formatShortest(r.rowNormMaxDev) << "\n";
    out << "parity layout: " << (r.parityOK ? "ok" : "violated") << "\n";
    for (const auto& w : r.conditionWarnings) out << "warning: " << w << "\n";
    out << "tolerance: " << formatShortest(tolerance) << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kCheckFailed;
}

Block readBlock(const std::string& path, Domain domain) {
  const std::string bytes = readFile(path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) {
    const PgmImage img = parsePgm(bytes);
    if (img.width != img.height) {
      throw Error(ErrorKind::SizeMismatch, "PGM block must be square, got " + std::to_string(img.width) + "x" +
                                               std::to_string(img.height));
    }
    return Block(img.width, std::vector<double>(img.pixels.begin(), img.pixels.end()), domain);
  }
  const DenseMatrix g = parseGrid(bytes);
  if (!g.square()) {
    throw Error(ErrorKind::SizeMismatch,
                "block must be square, got " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  }
  return Block(g.rows(), std::vector<double>(g.data().begin(), g.data().end()), domain);
}

std::string formatBlock(const Block& b, const std::string& format, int maxval) {
  if (format == "pgm") {
    PgmImage img{b.n, b.n, maxval, {}};
    for (double v : b.samples) img.pixels.push_back(static_cast<int>(std::clamp<double>(std::lround(v), 0, maxval)));
    return writePgm(img);
  }
  const DenseMatrix g(b.n, b.n, b.samples);
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::parse(toJson(g));
    doc["domain"] = b.domain == Domain::Spatial ? "spatial" : "frequency";
    return doc.dump(2) + "\n";
  }
  return toCsv(g);
}

int cmdTransform(const MatrixSource& src, const std::string& blockPath, const std::string& direction,
                 std::optional<std::size_t> keep, const std::string& format, const std::string& outPath,
                 const std::string& reportPath, int maxval, std::ostream& out, std::ostream& err) {
  const bool fwd = direction == "fwd";
  if (keep && !fwd) {
    err << "error: --keep requires --direction fwd\n";
    return kBadInput;
  }
  if (format == "pgm" && fwd) {
    err << "error: pgm output is only available for --direction inv\n";
    return kBadInput;
  }
  const OrthoMatrix m = resolveMatrix(src);
  printWarnings(m.warnings, err);
  const Block in = readBlock(blockPath, fwd ? Domain::Spatial : Domain::Frequency);
  if (keep && (*keep < 1 || *keep > in.n * in.n)) {
    err << "error: --keep must be in [1, " << in.n * in.n << "], got " << *keep << "\n";
    return kBadInput;
  }
  const Block res = fwd ? forward2D(m, in) : inverse2D(m, in);
  emit(formatBlock(res, format, maxval), outPath, out);

  if (keep) {
    const CompactionReport rep = compactionReport(m, in, *keep);
    nlohmann::json doc;
    doc["keep"] = *keep;
    doc["retainedEnergyFraction"] = rep.retainedEnergyFraction;
    doc["reconstructionMSE"] = rep.reconstructionMSE;
    const std::string text = doc.dump(2) + "\n";
    if (reportPath.empty()) {
      err << text;
    } else {
      writeFile(reportPath, text);
    }
  }
  return kOk;
}

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularSystem:
    case ErrorKind::ZeroRow:
      return kNumericFailure;
    default:
      return kBadInput;
  }
}

}  // namespace

VerifyReport verifyMatrix(const DenseMatrix& m, double tolerance, double scale) {
  if (!m.square()) throw Error(ErrorKind::Parse, "matrix is not square");
  if (!(scale > 0.0)) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  const std::size_t n = m.rows();
  auto at = [&](std::size_t i, std::size_t j) { return m(i, j) / scale; };

  VerifyReport r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += at(i, k) * at(j, k);
      const double dev = std::abs(s - (i == j ? 1.0 : 0.0));
      if (dev > r.orthogonalityResidual) {
        r.orthogonalityResidual = dev;
        r.worstRow = i;
        r.worstCol = j;
      }
      if (i == j) r.rowNormMaxDev = std::max(r.rowNormMaxDev, std::abs(std::sqrt(s) - 1.0));
    }
  }

  if (n % 2 != 0) {
    r.conditionWarnings.push_back("odd size " + std::to_string(n) + ": parity layout not applicable");
  } else {
    const std::size_t half = n / 2;
    const double ptol = std::max(tolerance, 1e-12);
    r.parityOK = true;
    for (std::size_t i = 0; i < n && r.parityOK; ++i) {
      const double sign = i % 2 == 0 ? 1.0 : -1.0;
      for (std::size_t k = 0; k < half; ++k) {
        if (std::abs(at(i, k) - sign * at(i, mirrorColumn(half, k))) > ptol) {
          r.parityOK = false;
          break;
        }
      }
    }
  }
  if (maxAbs(m.data()) / scale > 1.0 + 1e-9) {
    r.conditionWarnings.push_back("entries exceed 1 in magnitude; integer tables need --scale");
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate discrete orthogonal matrices from distinct positive values", "orthogen"};
  app.require_subcommand(1);

  MatrixSource gen, quant, trans;
  std::string genFormat = "pretty", genOut;
  auto* g = app.add_subcommand("generate", "generate a 2m x 2m orthogonal matrix");
  addSourceOptions(g, gen, false);
  g->add_option("--format", genFormat)->check(CLI::IsMember({"pretty", "csv", "json", "c-header"}));
  g->add_option("--out", genOut, "write to a file instead of stdout");

  std::string qScale = "auto", qFormat = "pretty", qMacro, qOut;
  auto* q = app.add_subcommand("quantize", "scale and round a generated matrix to integers");
  addSourceOptions(q, quant, false);
  q->add_option("--scale", qScale, "'auto' (64*sqrt(n)) or a positive number");
  q->add_option("--format", qFormat)->check(CLI::IsMember({"pretty", "csv", "json", "c-header"}));
  q->add_option("--macro", qMacro, "macro name for c-header output");
  q->add_option("--out", qOut, "write to a file instead of stdout");

  std::string vPath, vFormat = "text";
  double vTol = 1e-9, vScale = 1.0;
  bool vParity = false;
  auto* v = app.add_subcommand("verify", "check that a matrix file has orthonormal rows");
  v->add_option("matrix", vPath, "CSV or JSON matrix file")->required();
  v->add_option("--tolerance", vTol, "max allowed |M*M^T - I| entry")->check(CLI::PositiveNumber);
  v->add_option("--scale", vScale, "divide entries by this first (integer tables)")->check(CLI::PositiveNumber);
  v->add_flag("--require-parity", vParity, "also fail when the mirrored parity layout does not hold");
  v->add_option("--format", vFormat)->check(CLI::IsMember({"text", "json"}));

  std::string tBlock, tDir = "fwd", tFormat = "csv", tOut, tReport;
  std::optional<std::size_t> tKeep;
  int tMaxval = 255;
  auto* t = app.add_subcommand("transform", "apply a generated matrix as a separable 2D block transform");
  addSourceOptions(t, trans, true);
  t->add_option("--block", tBlock, "block file: CSV, JSON or PGM (P2/P5)")->required();
  t->add_option("--direction", tDir)->check(CLI::IsMember({"fwd", "inv"}));
  t->add_option("--keep", tKeep, "also report energy compaction keeping this many coefficients");
  t->add_option("--format", tFormat)->check(CLI::IsMember({"csv", "json", "pgm"}));
  t->add_option("--maxval", tMaxval, "PGM maxval for --format pgm")->check(CLI::Range(1, 65535));
  t->add_option("--out", tOut, "write the block to a file instead of stdout");
  t->add_option("--report", tReport, "write the compaction report here instead of stderr");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (g->parsed()) return cmdGenerate(gen, genFormat, genOut, out, err);
    if (q->parsed()) return cmdQuantize(quant, qScale, qFormat, qMacro, qOut, out, err);
    if (v->parsed()) return cmdVerify(vPath, vTol, vScale, vParity, vFormat, out);
    if (t->parsed()) return cmdTransform(trans, tBlock, tDir, tKeep, tFormat, tOut, tReport, tMaxval, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exitCodeFor(e.kind());
  }
  return kBadInput;
}

}  // namespace orthogen::cli
