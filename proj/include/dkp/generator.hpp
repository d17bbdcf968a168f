#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dkp/instance.hpp"

namespace dkp {

/// SplitMix64 (Steele, Lea & Flood). Chosen because the full algorithm fits
/// in a dozen lines and the output stream is identical on every platform,
/// which makes generated instances reproducible from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

/// Unbiased draw from [lo, hi] inclusive via rejection sampling.
uint64_t uniform_in(SplitMix64& rng, uint64_t lo, uint64_t hi);

enum class Family { Uncorrelated, Weak, Strong, InverseStrong };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Family label inferred from an instance file name ("unc_50_3.dkp",
/// "wdkp2_6.dkp", ...); "unknown" when no prefix matches.
std::string family_from_filename(std::string_view filename);

struct GenSpec {
  Family family = Family::Uncorrelated;
  uint32_t groups = 1;
  uint64_t seed = 0;
  uint32_t weight_lo = 1;
  uint32_t weight_hi = 1000;
  // capacity = max(max_i a[3i+2], floor(ratio * sum_i a[3i+2])), ratio = num/den
  uint32_t ratio_num = 1;
  uint32_t ratio_den = 2;
};

/// Deterministic instance construction for the four correlation families.
/// Generated instances satisfy the lenient invariants by construction and
/// the strict capacity conditions whenever groups >= 2 (default ratio).
DkpInstance generate(const GenSpec& spec);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
        line(line_number) {}
  size_t line;
};

/// Text format: '#'-prefixed comment lines are ignored; the first data line
/// is "n b" with n = 3m, followed by n lines "c_j a_j" in index order.
void save_instance(const DkpInstance& inst, const std::string& path,
                   const std::string& comment = "");

struct LoadResult {
  DkpInstance instance;
  bool lenient_ok = true;
  std::vector<std::string> warnings;  // lenient and strict findings, as text
};

/// Parses an instance file. Structural problems (n not a multiple of 3,
/// non-integer tokens, truncation) throw ParseError with the line number;
/// invariant violations only produce warnings.
LoadResult load_instance(const std::string& path);

/// Optional "<name>.opt" sidecar holding a single integer optimum.
std::optional<int64_t> read_opt_sidecar(const std::string& instance_path);
void write_opt_sidecar(const std::string& instance_path, int64_t value);

}  // namespace dkp
