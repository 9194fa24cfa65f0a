#pragma once

#include <vector>

namespace robinwall {

/// Ai and Ai' at one real argument.
struct AiryValue {
  double ai = 0.0;
  double ai_prime = 0.0;
  /// Set when the argument is past `kAiryMaxArgument` and both values were
  /// flushed to zero.
  bool underflow = false;
};

/// Ai and Ai' multiplied by exp(exponent), exponent = (2/3) x^{3/2} for
/// x > 0 and 0 otherwise. Never underflows.
struct ScaledAiry {
  double ai = 0.0;
  double ai_prime = 0.0;
  double exponent = 0.0;
};

/// Arguments beyond this flush Ai to an exact zero.
inline constexpr double kAiryMaxArgument = 100.0;

/// Crossover between the direct evaluation and the large-x asymptotic
/// series inside `airy_scaled`.
inline constexpr double kAiryAsymptoticSwitch = 10.0;

AiryValue airy(double x);
ScaledAiry airy_scaled(double x);

/// ln Ai(x) for x above the first zero of Ai'; finite for every such x.
double log_airy(double x);

/// (2/3) x^{3/2} for x > 0, else 0.
double airy_exponent(double x);

namespace detail {
/// Large-argument expansion of the scaled pair; only accurate for x >~ 8.
ScaledAiry airy_scaled_asymptotic(double x);
}  // namespace detail

enum class AiryZeroKind { ai, ai_prime };

/// n-th negative zero (n >= 1) of Ai or Ai'. Cached for n <= table capacity.
double airy_root(AiryZeroKind kind, int n);

/// Leading asymptotic formula for the n-th zero; used as Newton seed.
double airy_root_asymptotic(AiryZeroKind kind, int n);

/// Lazily built, immutable table of the first zeros of Ai and Ai'.
class AiryRootTable {
 public:
  static constexpr int kCapacity = 256;

  static const AiryRootTable& instance();

  int count() const noexcept { return static_cast<int>(a_.size()); }
  /// 1-based accessors.
  double a(int n) const { return a_.at(static_cast<std::size_t>(n - 1)); }
  double a_prime(int n) const {
    return a_prime_.at(static_cast<std::size_t>(n - 1));
  }

 private:
  AiryRootTable();
  std::vector<double> a_;
  std::vector<double> a_prime_;
};

/// Gamma function for x > 0.
double gamma_fn(double x);

}  // namespace robinwall
