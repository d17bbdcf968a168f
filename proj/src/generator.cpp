#include "dkp/generator.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dkp {

uint64_t uniform_in(SplitMix64& rng, uint64_t lo, uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_in: empty range");
  const uint64_t range = hi - lo + 1;
  if (range == 0) return rng.next();  // full 64-bit range
  // Reject draws from the tail that would bias the modulo.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  uint64_t u;
  do {
    u = rng.next();
  } while (u >= limit);
  return lo + u % range;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Uncorrelated: return "unc";
    case Family::Weak: return "weak";
    case Family::Strong: return "strong";
    case Family::InverseStrong: return "inv";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "unc") return Family::Uncorrelated;
  if (name == "weak") return Family::Weak;
  if (name == "strong") return Family::Strong;
  if (name == "inv") return Family::InverseStrong;
  return std::nullopt;
}

std::string family_from_filename(std::string_view filename) {
  const auto slash = filename.find_last_of("/\\");
  if (slash != std::string_view::npos) filename.remove_prefix(slash + 1);
  static constexpr std::pair<const char*, const char*> kPrefixes[] = {
      {"unc", "unc"},  {"udkp", "unc"},  {"weak", "weak"},  {"wdkp", "weak"},
      {"strong", "strong"}, {"sdkp", "strong"}, {"inv", "inv"}, {"idkp", "inv"},
  };
  for (const auto& [prefix, fam] : kPrefixes) {
    if (filename.substr(0, std::string_view(prefix).size()) == prefix) return fam;
  }
  return "unknown";
}

namespace {

constexpr int64_t kWeakNoise = 100;   // c_j = a_j + U[-100,100], clipped to >= 1
constexpr uint32_t kStrongShift = 100;

// Base-item weights: a0 < a1 drawn from [lo,hi]; the pair is redrawn when the
// open interval (a1, a0+a1) for the bundled weight would be empty (a0 < 2).
void draw_weight_pair(SplitMix64& rng, uint32_t lo, uint32_t hi, uint32_t& a0, uint32_t& a1) {
  for (;;) {
    a0 = static_cast<uint32_t>(uniform_in(rng, lo, hi));
    a1 = static_cast<uint32_t>(uniform_in(rng, lo, hi));
    if (a0 == a1) continue;
    if (a0 > a1) std::swap(a0, a1);
    if (a0 < 2) continue;
    return;
  }
}

uint32_t draw_bundled_weight(SplitMix64& rng, uint32_t a0, uint32_t a1) {
  return static_cast<uint32_t>(uniform_in(rng, a1 + 1, static_cast<uint64_t>(a0) + a1 - 1));
}

void draw_distinct_pair(SplitMix64& rng, uint32_t lo, uint32_t hi, uint32_t& c0, uint32_t& c1) {
  for (;;) {
    c0 = static_cast<uint32_t>(uniform_in(rng, lo, hi));
    c1 = static_cast<uint32_t>(uniform_in(rng, lo, hi));
    if (c0 == c1) continue;
    if (c0 > c1) std::swap(c0, c1);
    return;
  }
}

uint32_t noisy_profit(SplitMix64& rng, uint32_t a) {
  const int64_t noise = static_cast<int64_t>(uniform_in(rng, 0, 2 * kWeakNoise)) - kWeakNoise;
  const int64_t c = static_cast<int64_t>(a) + noise;
  return c < 1 ? 1u : static_cast<uint32_t>(c);
}

}  // namespace

DkpInstance generate(const GenSpec& spec) {
  if (spec.groups < 1) throw std::invalid_argument("generate: need at least one group");
  if (spec.weight_lo < 1 || spec.weight_lo >= spec.weight_hi) {
    throw std::invalid_argument("generate: weight range must satisfy 1 <= lo < hi");
  }
  if (spec.weight_hi > 1000000000u) {
    throw std::invalid_argument("generate: weight_hi too large");
  }
  if (spec.ratio_num == 0 || spec.ratio_den == 0 || spec.ratio_num > spec.ratio_den) {
    throw std::invalid_argument("generate: capacity ratio must lie in (0,1]");
  }

  SplitMix64 rng(spec.seed);
  DkpInstance inst;
  inst.profits.resize(3 * spec.groups);
  inst.weights.resize(3 * spec.groups);

  uint64_t heavy_sum = 0;
  uint32_t heavy_max = 0;
  for (uint32_t i = 0; i < spec.groups; ++i) {
    uint32_t a0, a1, a2, c0, c1;
    switch (spec.family) {
      case Family::Uncorrelated:
        draw_weight_pair(rng, spec.weight_lo, spec.weight_hi, a0, a1);
        a2 = draw_bundled_weight(rng, a0, a1);
        draw_distinct_pair(rng, spec.weight_lo, spec.weight_hi, c0, c1);
        break;
      case Family::Weak:
        draw_weight_pair(rng, spec.weight_lo, spec.weight_hi, a0, a1);
        a2 = draw_bundled_weight(rng, a0, a1);
        do {
          c0 = noisy_profit(rng, a0);
          c1 = noisy_profit(rng, a1);
        } while (!(c0 < c1));
        break;
      case Family::Strong:
        draw_weight_pair(rng, spec.weight_lo, spec.weight_hi, a0, a1);
        a2 = draw_bundled_weight(rng, a0, a1);
        c0 = a0 + kStrongShift;
        c1 = a1 + kStrongShift;
        break;
      case Family::InverseStrong:
        draw_distinct_pair(rng, spec.weight_lo, spec.weight_hi, c0, c1);
        a0 = c0 + kStrongShift;
        a1 = c1 + kStrongShift;
        a2 = draw_bundled_weight(rng, a0, a1);
        break;
      default:
        throw std::invalid_argument("generate: unknown family");
    }
    inst.weights[3 * i] = a0;
    inst.weights[3 * i + 1] = a1;
    inst.weights[3 * i + 2] = a2;
    inst.profits[3 * i] = c0;
    inst.profits[3 * i + 1] = c1;
    inst.profits[3 * i + 2] = c0 + c1;
    heavy_sum += a2;
    heavy_max = std::max(heavy_max, a2);
  }

  const uint64_t scaled = static_cast<uint64_t>(
      (static_cast<unsigned __int128>(heavy_sum) * spec.ratio_num) / spec.ratio_den);
  inst.capacity = std::max<uint64_t>(heavy_max, scaled);
  return inst;
}

void save_instance(const DkpInstance& inst, const std::string& path, const std::string& comment) {
  std::ofstream out(path, std::ios::binary);  // binary: identical bytes everywhere
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  out << inst.item_count() << ' ' << inst.capacity << "\n";
  for (uint32_t j = 0; j < inst.item_count(); ++j) {
    out << inst.profits[j] << ' ' << inst.weights[j] << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

struct Token {
  std::string text;
  size_t line;
};

uint64_t parse_u64(const Token& tok, uint64_t max_value, const char* what) {
  if (tok.text.empty() || !std::all_of(tok.text.begin(), tok.text.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(std::string("expected non-negative integer for ") + what + ", got '" +
                         tok.text + "'",
                     tok.line);
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(tok.text.c_str(), &end, 10);
  if (errno != 0 || end != tok.text.c_str() + tok.text.size() || v > max_value) {
    throw ParseError(std::string(what) + " out of range: '" + tok.text + "'", tok.line);
  }
  return static_cast<uint64_t>(v);
}

}  // namespace

LoadResult load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);

  std::vector<Token> tokens;
  std::string line;
  size_t line_no = 0;
  size_t last_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    last_line = line_no;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) tokens.push_back({word, line_no});
  }

  size_t pos = 0;
  auto next = [&](const char* what) -> const Token& {
    if (pos >= tokens.size()) {
      throw ParseError(std::string("unexpected end of file while reading ") + what,
                       last_line == 0 ? 1 : last_line);
    }
    return tokens[pos++];
  };

  const Token& n_tok = next("n");
  const uint64_t n = parse_u64(n_tok, UINT32_MAX, "n");
  if (n % 3 != 0) throw ParseError("n must be a multiple of 3", n_tok.line);
  const uint64_t b = parse_u64(next("b"), UINT64_MAX, "b");

  LoadResult result;
  result.instance.capacity = b;
  result.instance.profits.reserve(n);
  result.instance.weights.reserve(n);
  for (uint64_t j = 0; j < n; ++j) {
    result.instance.profits.push_back(
        static_cast<uint32_t>(parse_u64(next("c_j"), UINT32_MAX, "c_j")));
    result.instance.weights.push_back(
        static_cast<uint32_t>(parse_u64(next("a_j"), UINT32_MAX, "a_j")));
  }
  if (pos != tokens.size()) {
    throw ParseError("trailing data after the last item", tokens[pos].line);
  }

  const ValidationReport lenient = validate(result.instance, false);
  result.lenient_ok = lenient.ok();
  for (const Violation& v : lenient.violations) {
    result.warnings.push_back("group " + std::to_string(v.group) + ": " + v.message);
  }
  if (result.lenient_ok) {
    // Strict findings are advisory; literature files may or may not satisfy them.
    for (const Violation& v : validate(result.instance, true).violations) {
      result.warnings.push_back("strict: group " + std::to_string(v.group) + ": " + v.message);
    }
  }
  return result;
}

namespace {

std::string sidecar_path(const std::string& instance_path) {
  std::filesystem::path p(instance_path);
  p.replace_extension(".opt");
  return p.string();
}

}  // namespace

std::optional<int64_t> read_opt_sidecar(const std::string& instance_path) {
  std::ifstream in(sidecar_path(instance_path));
  if (!in) return std::nullopt;
  int64_t v;
  if (!(in >> v)) return std::nullopt;
  return v;
}

void write_opt_sidecar(const std::string& instance_path, int64_t value) {
  const std::string path = sidecar_path(instance_path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << value << "\n";
}

}  // namespace dkp
